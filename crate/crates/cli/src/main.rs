use clap::{Parser, Subcommand, ValueEnum};
use parkhopf::chars::{self, DyckPath, SchroderPath, SignedStatistic};
use parkhopf::combinat::{ndpfs, packed_words, parking_functions, permutations, quasi_ribbons, BinaryTree, Ndpf};
use parkhopf::exact::Var;
use parkhopf::json::{self, document};
use parkhopf::lagrange::{self, bijection};
use parkhopf::verify::{self, Suite};
use parkhopf::{QPoly, Rational};
use serde_json::{json, Value};
use std::fmt::Display;
use std::io::{ErrorKind, Write};
use std::process::ExitCode;

const DEFAULT_MAX_N: usize = 8;

#[derive(Parser)]
#[command(name = "parkhopf", version, about = "Exact computations with parking-function Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the objects of a family of size n.
    Enumerate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
    },
    /// Homogeneous components of a solved series, as JSON.
    Series {
        #[arg(long, value_enum)]
        which: SeriesArg,
        #[arg(long)]
        degree: usize,
    },
    /// Coefficients of a named polynomial.
    Poly {
        #[arg(long, value_enum)]
        which: PolyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Apply one of the bijections to a single input.
    Bijection {
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long)]
        input: String,
    },
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// Coefficient tables, one row per n.
    Table {
        #[arg(long, value_enum)]
        which: TableArg,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Pf,
    Ndpf,
    Qribbon,
    Packed,
    Perm,
    SignedPf,
    Dyck,
    Schroder,
    Tree,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Lines,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesArg {
    #[value(name = "g")]
    SmallG,
    #[value(name = "f")]
    SmallF,
    #[value(name = "G")]
    BigG,
    #[value(name = "X")]
    BigX,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyArg {
    SuperNarayana,
    PnT,
    Narayana,
    PnAlpha,
    Qn,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    TreeToNdpf,
    NdpfToTree,
    DyckEncode,
    SchroderEncode,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Duplicial,
    Triduplicial,
    Bialgebra,
    Rewriting,
    Lagrange,
    Intervals,
    Characters,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    QnTriangle,
    A060693,
    BarDistribution,
}

/// Why a command stopped early.
enum Failure {
    Usage(String),
    Verification,
}

impl From<parkhopf::Error> for Failure {
    fn from(e: parkhopf::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn max_n() -> Result<usize, Failure> {
    match std::env::var("PARKHOPF_MAX_N") {
        Err(_) => Ok(DEFAULT_MAX_N),
        Ok(s) => s.trim().parse().map_err(|_| Failure::Usage(format!("PARKHOPF_MAX_N must be a number, got {s:?}"))),
    }
}

fn capped(what: &str, n: usize) -> Result<usize, Failure> {
    let cap = max_n()?;
    if n > cap {
        return Err(Failure::Usage(format!("{what} {n} exceeds PARKHOPF_MAX_N = {cap}")));
    }
    Ok(n)
}

/// Writes one line to stdout; a closed pipe ends the process quietly.
fn emit(line: impl Display) {
    if let Err(e) = writeln!(std::io::stdout().lock(), "{line}") {
        if e.kind() != ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
        std::process::exit(0);
    }
}

fn print_json(v: &Value) {
    emit(serde_json::to_string_pretty(v).expect("values serialize"));
}

fn strings<T: Display>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

fn family_items(family: FamilyArg, n: usize) -> Vec<String> {
    match family {
        FamilyArg::Pf => strings(parking_functions(n)),
        FamilyArg::Ndpf => strings(ndpfs(n)),
        FamilyArg::Qribbon => strings(quasi_ribbons(n)),
        FamilyArg::Packed => strings(packed_words(n)),
        FamilyArg::Perm => strings(permutations(n)),
        FamilyArg::SignedPf => strings(chars::signed_parking_functions(n)),
        FamilyArg::Dyck => strings(chars::dyck_paths(n)),
        FamilyArg::Schroder => strings(chars::schroder_paths(n)),
        FamilyArg::Tree => strings(BinaryTree::all(n)),
    }
}

fn enumerate(family: FamilyArg, n: usize, format: Format) -> Outcome {
    let n = capped("n", n)?;
    let items = family_items(family, n);
    let name = family.to_possible_value().expect("no skipped variants").get_name().to_string();
    match format {
        Format::Lines => items.iter().for_each(emit),
        Format::Json => print_json(&document(json!({ "family": name, "n": n, "count": items.len(), "items": items }))),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Failure::Usage(e.to_string());
            w.write_record(["index", "value"]).map_err(io)?;
            for (i, s) in items.iter().enumerate() {
                w.write_record([i.to_string().as_str(), s]).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
            emit(String::from_utf8(bytes).expect("csv of utf-8 fields").trim_end());
        }
    }
    Ok(())
}

fn series(which: SeriesArg, degree: usize) -> Outcome {
    let degree = capped("degree", degree)?;
    let component = |k: usize, display: String, element: Value| {
        let mut v = json!({ "degree": k, "display": display });
        if let (Value::Object(out), Value::Object(e)) = (&mut v, element) {
            out.extend(e);
        }
        v
    };
    let (name, components): (&str, Vec<Value>) = match which {
        SeriesArg::SmallG | SeriesArg::SmallF => {
            let s = match which {
                SeriesArg::SmallG => lagrange::solve_g::<i64>(degree)?,
                _ => lagrange::solve_f::<i64>(degree)?,
            };
            let name = if matches!(which, SeriesArg::SmallG) { "g" } else { "f" };
            let comps = s.components().iter().enumerate().map(|(k, e)| component(k, e.to_string(), json::sym_element(e)));
            (name, comps.collect())
        }
        SeriesArg::BigG => {
            let s = lagrange::solve_g_cqsym::<i64>(degree);
            let comps = s.components().iter().enumerate().map(|(k, e)| component(k, e.to_string(), json::element("P", e)));
            ("G", comps.collect())
        }
        SeriesArg::BigX => {
            let s = lagrange::solve_x_fqsym::<i64>(degree);
            let comps = s.components().iter().enumerate().map(|(k, e)| component(k, e.to_string(), json::element("G", e)));
            ("X", comps.collect())
        }
    };
    print_json(&document(json!({ "series": name, "degree": degree, "components": components })));
    Ok(())
}

fn coeffs(p: &QPoly, v: Var) -> Vec<Rational> {
    p.univariate_coeffs(v).unwrap_or_default()
}

fn csv_line(row: &[Rational]) -> String {
    strings(row).join(",")
}

fn poly(which: PolyArg, n: usize, format: TableFormat) -> Outcome {
    let n = capped("n", n)?;
    let (name, p, vars) = match which {
        PolyArg::SuperNarayana => ("super-narayana", chars::super_narayana_count(n, SignedStatistic::Sinv), (Var::T, Some(Var::Q))),
        PolyArg::PnT => ("pn-t", chars::schroder_polynomials(n)?.by_paths, (Var::T, None)),
        PolyArg::Narayana => ("narayana", chars::lassalle_narayana(n)?, (Var::Q, None)),
        PolyArg::PnAlpha => ("pn-alpha", chars::p_alpha(n), (Var::Alpha, None)),
        PolyArg::Qn => ("qn", chars::q_n(n), (Var::Q, None)),
    };
    // A bivariate polynomial prints one row per power of the first variable.
    let rows: Vec<Vec<Rational>> = match vars {
        (v, None) => vec![coeffs(&p, v)],
        (v, Some(w)) => p.coeffs_in(v).iter().map(|c| coeffs(c, w)).collect(),
    };
    match format {
        TableFormat::Csv => rows.iter().for_each(|r| emit(csv_line(r))),
        TableFormat::Json => {
            let mut body = json!({ "poly": name, "n": n, "display": p.to_string(), "variables": [vars.0.name()] });
            if let Some(w) = vars.1 {
                body["variables"] = json!([vars.0.name(), w.name()]);
                body["rows"] = Value::from(rows.iter().map(|r| json::row(r)).collect::<Vec<_>>());
            } else {
                body["coefficients"] = json::row(&rows[0]);
            }
            print_json(&document(body));
        }
    }
    Ok(())
}

fn bijection(direction: Direction, input: &str) -> Outcome {
    let out = match direction {
        Direction::TreeToNdpf => bijection::tree_to_ndpf(&input.parse::<BinaryTree>()?).to_string(),
        Direction::NdpfToTree => bijection::ndpf_to_tree(&input.parse::<Ndpf>()?)?.to_string(),
        Direction::DyckEncode => chars::dyck_encode(&input.parse::<DyckPath>()?).to_string(),
        Direction::SchroderEncode => chars::schroder_encode(&input.parse::<SchroderPath>()?).to_string(),
    };
    emit(out);
    Ok(())
}

fn verify(suite: SuiteArg, max_n: usize) -> Outcome {
    let max_n = capped("max-n", max_n)?;
    let suites: Vec<Suite> = match suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        one => vec![one.to_possible_value().expect("named").get_name().parse()?],
    };
    let results = verify::run(&suites, max_n);
    let name = suite.to_possible_value().expect("named").get_name().to_string();
    let mut body = json!({ "suite": name, "max_n": max_n });
    if let (Value::Object(out), Value::Object(r)) = (&mut body, json::check_results(&results)) {
        out.extend(r);
    }
    print_json(&document(body));
    if results.iter().all(|c| c.passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn table(which: TableArg, n_max: usize, format: TableFormat) -> Outcome {
    let n_max = capped("n-max", n_max)?;
    let rows: Vec<(usize, Vec<Rational>)> = match which {
        TableArg::QnTriangle => chars::q_triangle(n_max).into_iter().enumerate().map(|(i, r)| (i + 1, r)).collect(),
        TableArg::A060693 => chars::schroder_triangle(n_max)?.into_iter().enumerate().collect(),
        TableArg::BarDistribution => (1..=n_max).map(|n| (n, coeffs(&chars::bar_distribution(n), Var::T))).collect(),
    };
    match format {
        TableFormat::Csv => rows.iter().for_each(|(n, r)| emit(format!("{n},{}", csv_line(r)))),
        TableFormat::Json => {
            let name = which.to_possible_value().expect("named").get_name().to_string();
            let rows: Vec<Value> = rows.iter().map(|(n, r)| json!({ "n": n, "coefficients": json::row(r) })).collect();
            print_json(&document(json!({ "table": name, "rows": rows })));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = match cli.command {
        Command::Enumerate { family, n, format } => enumerate(family, n, format),
        Command::Series { which, degree } => series(which, degree),
        Command::Poly { which, n, format } => poly(which, n, format),
        Command::Bijection { direction, input } => bijection(direction, &input),
        Command::Verify { suite, max_n } => verify(suite, max_n),
        Command::Table { which, n_max, format } => table(which, n_max, format),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
