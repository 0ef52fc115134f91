//! Named verification suites over the whole library.
//!
//! Each suite runs a fixed list of checks whose sizes are bounded by
//! `max_n` and by a per-check ceiling that keeps the suite fast.

use crate::chars::{self, SignedStatistic};
use crate::combinat::{compositions, ndpfs, parking_functions, quasi_ribbons, BinaryTree, Composition, Ndpf};
use crate::error::{Error, Result};
use crate::exact::{catalan, series_sqrt_expand, LinComb, Ring, Var};
use crate::hopf::axioms::{self, AxiomFailure};
use crate::hopf::{cqsym, pqsym, psi, Cqsym, Pqsym};
use crate::lagrange::{self, bijection, Tamari};
use crate::operad::{count_normal_forms, dual_basis_trees, hook_trees, normal_form_shape_check, EvalTree, Mode};
use crate::symfun::{SymBasis, SymElem};
use crate::{QPoly, Rational};
use num_traits::{One, Zero};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Suite {
    Duplicial,
    Triduplicial,
    Bialgebra,
    Rewriting,
    Lagrange,
    Intervals,
    Characters,
}

impl Suite {
    /// Canonical order, also the output order of [`run`].
    pub const ALL: [Suite; 7] = [
        Suite::Duplicial,
        Suite::Triduplicial,
        Suite::Bialgebra,
        Suite::Rewriting,
        Suite::Lagrange,
        Suite::Intervals,
        Suite::Characters,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Duplicial => "duplicial",
            Suite::Triduplicial => "triduplicial",
            Suite::Bialgebra => "bialgebra",
            Suite::Rewriting => "rewriting",
            Suite::Lagrange => "lagrange",
            Suite::Intervals => "intervals",
            Suite::Characters => "characters",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse { input: s.to_string(), what: "suite" })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

struct Recorder {
    suite: Suite,
    results: Vec<CheckResult>,
}

impl Recorder {
    fn check(&mut self, name: &str, f: impl FnOnce() -> Result<(bool, String)>) {
        let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
        self.results.push(CheckResult { suite: self.suite, name: name.to_string(), passed, detail });
    }
}

fn axiom_outcome(failures: Result<Vec<AxiomFailure>>, n: usize) -> Result<(bool, String)> {
    let failures = failures?;
    Ok(match failures.first() {
        None => (true, format!("all basis operands, total degree <= {n}")),
        Some(f) => (false, format!("{} failures; first: {} at {}", failures.len(), f.relation, f.operands)),
    })
}

fn up_to(n: usize) -> String {
    format!("n <= {n}")
}

/// Coefficients `s_0, …, s_{order}` of the solution of `S = 1 + 3xS + 2x²S²`,
/// from `S = (1 − 3x − √(1 − 6x + x²)) / (4x²)`.
pub fn tri_series(order: usize) -> Result<Vec<Rational>> {
    let int = |c: i64| Rational::from_int(c);
    let root = series_sqrt_expand(vec![int(1), int(-6), int(1)], order + 2)?;
    Ok((0..=order)
        .map(|n| {
            let linear = match n + 2 {
                1 => int(-3),
                _ => Rational::zero(),
            };
            (linear - root.coeff(n + 2)) / int(4)
        })
        .collect())
}

fn duplicial(r: &mut Recorder, m: usize) {
    let n = m.min(6);
    r.check("cqsym duplicial relations", || axiom_outcome(axioms::duplicial_axioms(n), n));
    r.check("cross relation fails on 1,1,1", || {
        let (l, rhs) = axioms::cross_relation_witness()?;
        let ok = l == cqsym::p("113")? && rhs == cqsym::p("112")?;
        Ok((ok, format!("(1<1)>1 = {l}, 1<(1>1) = {rhs}")))
    });
    r.check("fqsym dendriform relations", || axiom_outcome(axioms::dendriform_axioms(n), n));
}

fn triduplicial(r: &mut Recorder, m: usize) {
    let n = m.min(6);
    r.check("sqsym triduplicial relations", || axiom_outcome(axioms::triduplicial_axioms(n), n));
    let w = m.min(5);
    r.check("wqsym tridendriform relations", || axiom_outcome(axioms::tridendriform_axioms(w), w));
    let d = m.min(4);
    r.check("free tridendriform span in wqsym", || {
        let dims = axioms::free_tridendriform_dimensions(d);
        let expect: Vec<usize> = (1..=d).map(|k| count_normal_forms(Mode::Tri, k) as usize).collect();
        Ok((dims == expect, format!("dimensions {dims:?}")))
    });
}

fn bialgebra(r: &mut Recorder, m: usize) {
    r.check("coproduct of the generator vanishes", || Ok((cqsym::dup_coproduct(&cqsym::x::<i64>()).is_zero(), String::new())));
    r.check("displayed primitives", || {
        let x = cqsym::x::<i64>();
        let xx = cqsym::bracket(&x, &x)?;
        let p = |s| cqsym::p::<i64>(s);
        let left = cqsym::bracket(&xx, &x)?;
        let right = cqsym::bracket(&x, &xx)?;
        let shapes = xx == p("11")? - p("12")?
            && left == p("111")? - p("122")? - p("113")? + p("123")?
            && right == p("111")? - p("122")? - p("112")? + p("123")?;
        let primitive = [&xx, &left, &right].iter().all(|e| cqsym::dup_coproduct(e).is_zero());
        Ok((shapes && primitive, format!("{xx}; {left}; {right}")))
    });
    let n = m.min(6);
    r.check("primitive dimensions are Catalan", || {
        let dims = (1..=n).map(cqsym::primitive_dimension::<Rational>).collect::<Result<Vec<_>>>()?;
        let ok = dims.iter().enumerate().all(|(k, &d)| d as u64 == catalan(k as u64));
        Ok((ok, format!("{dims:?}")))
    });
    r.check("coassociativity", || {
        let ok = (1..=n).all(|k| {
            ndpfs(k).into_iter().all(|pi| {
                let (a, b) = cqsym::iterated_coproducts::<i64>(&LinComb::basis(pi));
                a == b
            })
        });
        Ok((ok, up_to(n)))
    });
    let b = m.min(5);
    r.check("bialgebra relation for both products", || axiom_outcome(axioms::bialgebra_axiom(b), b));
}

fn rewriting(r: &mut Recorder, m: usize) {
    let n = m.min(6);
    r.check("triduplicial normal forms count the series", || {
        let series = tri_series(n)?;
        let counts: Vec<u64> = (1..=n).map(|k| count_normal_forms(Mode::Tri, k)).collect();
        let ok = counts.iter().zip(&series).all(|(&c, s)| Rational::from_int(c as i64) == *s);
        Ok((ok, format!("{counts:?}")))
    });
    r.check("duplicial normal forms are Catalan", || {
        let counts: Vec<u64> = (1..=n.max(m.min(8))).map(|k| count_normal_forms(Mode::Dup, k)).collect();
        let ok = counts.iter().enumerate().all(|(k, &c)| c == catalan(k as u64 + 1));
        Ok((ok, format!("{counts:?}")))
    });
    r.check("normal forms match their shape description", || {
        let ok = (1..=n).all(|k| normal_form_shape_check(Mode::Dup, k) && normal_form_shape_check(Mode::Tri, k));
        Ok((ok, up_to(n)))
    });
    r.check("evaluation is a bijection on normal forms", || {
        for k in 1..=n {
            let tri: BTreeSet<_> = EvalTree::all(Mode::Tri, k)
                .iter()
                .filter(|t| t.is_normal(Mode::Tri))
                .map(EvalTree::eval_tri)
                .collect::<Result<_>>()?;
            let dup: BTreeSet<_> = EvalTree::all(Mode::Dup, k)
                .iter()
                .filter(|t| t.is_normal(Mode::Dup))
                .map(EvalTree::eval_dup)
                .collect::<Result<_>>()?;
            let sizes_ok = tri.len() as u64 == count_normal_forms(Mode::Tri, k)
                && dup.len() as u64 == count_normal_forms(Mode::Dup, k);
            if !sizes_ok || tri != quasi_ribbons(k).into_iter().collect() || dup != ndpfs(k).into_iter().collect() {
                return Ok((false, format!("fails at n = {k}")));
            }
        }
        Ok((true, up_to(n)))
    });
    let t = m.min(5);
    r.check("rewriting preserves evaluation and terminates", || {
        for k in 1..=t {
            for tree in EvalTree::all(Mode::Tri, k) {
                let v = tree.eval_tri()?;
                let (nf, steps) = tree.normal_form_counted(Mode::Tri);
                if nf.eval_tri()? != v || steps > k * k * k {
                    return Ok((false, format!("{tree}")));
                }
            }
        }
        Ok((true, up_to(t)))
    });
    r.check("dual operad dimensions", || {
        let ok = (1..=n).all(|k| {
            let same = |mode| {
                let a: BTreeSet<_> = dual_basis_trees(mode, k).into_iter().collect();
                a == hook_trees(mode, k).into_iter().collect()
            };
            same(Mode::Dup) && same(Mode::Tri) && hook_trees(Mode::Dup, k).len() == k
                && hook_trees(Mode::Tri, k).len() == (1 << k) - 1
        });
        Ok((ok, up_to(n)))
    });
}

fn sym_s(terms: &[&str]) -> Result<SymElem<i64>> {
    let terms = terms.iter().map(|k| Ok((k.parse::<Composition>()?, 1))).collect::<Result<_>>()?;
    Ok(SymElem::from_terms(SymBasis::S, terms))
}

fn lagrange(r: &mut Recorder, m: usize) {
    let n = m.min(6);
    r.check("f displays, closed form and functional equation", || {
        let f = lagrange::solve_f::<i64>(n.max(3))?;
        let displays = f.component(2) == Some(&sym_s(&["110", "200"])?)
            && f.component(3) == Some(&sym_s(&["1110", "1200", "2010", "2100", "3000"])?);
        let closed = (0..=n).all(|k| f.component(k) == Some(&lagrange::f_closed_form(k)));
        let residual = lagrange::fixed_point_residual(&f, true)?.iter().all(SymElem::is_zero);
        Ok((displays && closed && residual, format!("f_3 = {}", f.component(3).expect("solved"))))
    });
    let g_order = m.min(7);
    r.check("g display and functional equation", || {
        let g = lagrange::solve_g::<i64>(g_order.max(4))?;
        let g4: SymElem<i64> = SymElem::from_terms(
            SymBasis::S,
            [("4", 1), ("31", 3), ("22", 2), ("13", 1), ("211", 3), ("121", 2), ("112", 1), ("1111", 1)]
                .iter()
                .map(|&(k, c)| Ok((k.parse::<Composition>()?, c)))
                .collect::<Result<_>>()?,
        );
        let residual = lagrange::fixed_point_residual(&g, false)?.iter().all(SymElem::is_zero);
        let sums = g.components().iter().enumerate().all(|(k, gk)| {
            gk.terms().iter().map(|(_, c)| *c).sum::<i64>() as u64 == catalan(k as u64)
        });
        Ok((g.component(4) == Some(&g4) && residual && sums, format!("g_4 = {g4}")))
    });
    r.check("g is conjugation symmetric", || Ok((lagrange::symmetry_of_g(g_order)?, up_to(g_order))));
    r.check("cqsym lift of the tree equation", || {
        let big = lagrange::solve_g_cqsym::<i64>(g_order);
        let residual = lagrange::g_cqsym_residual(&big).iter().all(LinComb::is_zero);
        let all_ones = (0..=g_order).all(|k| {
            big.component(k) == Some(&ndpfs(k).into_iter().map(|p| (p, 1)).collect::<Cqsym<i64>>())
        });
        for k in 0..=g_order {
            lagrange::tree_terms_are_single_keys(k)?;
        }
        Ok((residual && all_ones && lagrange::phi_of_g(g_order.min(6))?, up_to(g_order)))
    });
    let b = m.min(8);
    r.check("tree bijection", || {
        let example: BinaryTree = "((.,(.,.)),((.,.),(.,(.,.))))".parse()?;
        let mut ok = bijection::tree_to_ndpf(&example) == "1133444".parse::<Ndpf>()?;
        for k in 0..=b {
            for t in BinaryTree::all(k) {
                ok &= bijection::ndpf_to_tree(&bijection::tree_to_ndpf(&t))? == t;
            }
        }
        Ok((ok, up_to(b)))
    });
    r.check("involution", || {
        let table = [
            ("1", "1"), ("12", "11"), ("123", "111"), ("113", "112"), ("122", "122"), ("1234", "1111"),
            ("1134", "1112"), ("1224", "1122"), ("1124", "1113"), ("1114", "1123"), ("1233", "1222"),
            ("1133", "1223"),
        ];
        let mut ok = true;
        for (a, c) in table {
            let (a, c): (Ndpf, Ndpf) = (a.parse()?, c.parse()?);
            ok &= lagrange::iota(&a)? == c && lagrange::iota(&c)? == a;
        }
        for k in 0..=b {
            for pi in ndpfs(k) {
                ok &= lagrange::iota(&lagrange::iota(&pi)?)? == pi;
            }
        }
        ok &= lagrange::iota_conjugates_evaluations(b.min(7))?;
        Ok((ok, up_to(b)))
    });
    let q = m.min(5);
    // The rule holds with the factors of the product on the right exchanged.
    r.check("q basis product rule, factors reversed", || {
        Ok((lagrange::q_basis_product_check_reversed(q)?, format!("Q^a Q^b = Q^(b<a), degree <= {q}")))
    });
    r.check("fqsym lift of the tree equation", || {
        let x = lagrange::solve_x_fqsym::<i64>(q);
        let residual = lagrange::x_fqsym_residual(&x).iter().all(LinComb::is_zero);
        let blocks = lagrange::fqsym_tree_supports(4)?;
        let ok = residual && blocks.len() == 14 && blocks.iter().map(Vec::len).sum::<usize>() == 24;
        Ok((ok, format!("{} blocks at n = 4", blocks.len())))
    });
}

fn intervals(r: &mut Recorder, m: usize) {
    let n = m.min(6);
    r.check("evaluation classes are tamari intervals", || {
        let g = lagrange::solve_g::<i64>(n)?;
        for k in 1..=n {
            let lattice = Tamari::new(k);
            for i in compositions(k as u32) {
                let (interval, size) = lagrange::tamari::tamari_interval_check_in(&lattice, &i)?;
                let expected = g.component(k).expect("solved").coeff(&i);
                if !interval || size as i64 != expected {
                    return Ok((false, format!("class {i}: interval {interval}, size {size}, coefficient {expected}")));
                }
            }
        }
        Ok((true, up_to(n)))
    });
    r.check("canopy partition equals evaluation partition", || {
        let ok = (1..=n).map(bijection::canopy_evaluation_correspondence).collect::<Result<Vec<_>>>()?;
        Ok((ok.iter().all(|&b| b) && bijection::canopy_block_sizes(4) == [1, 1, 1, 1, 2, 2, 3, 3], up_to(n)))
    });
    r.check("tamari lattice at n = 4", || {
        let covers = Tamari::new(4).hasse_ndpf();
        Ok((covers.len() == 21, format!("{} covers", covers.len())))
    });
}

fn poly_tq(terms: &[(u32, u32, i64)]) -> QPoly {
    terms.iter().fold(QPoly::zero(), |acc, &(i, j, c)| {
        acc + QPoly::monomial(
            Rational::from_int(c),
            crate::exact::Monomial::var(Var::T, i).with_exp(Var::Q, j),
        )
    })
}

fn univariate(v: Var, c: &[i64]) -> QPoly {
    QPoly::univariate(v, &c.iter().map(|&x| Rational::from_int(x)).collect::<Vec<_>>())
}

fn psi_character_check(max_total: usize) -> Result<bool> {
    for total in 2..=max_total {
        for k in 1..total {
            for a in parking_functions(k) {
                let fa: Pqsym<Rational> = LinComb::basis(a);
                let pa = psi(&fa);
                for b in parking_functions(total - k) {
                    let fb: Pqsym<Rational> = LinComb::basis(b);
                    if psi(&pqsym::product(&fa, &fb)) != pa.s_product(&psi(&fb))? {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

fn characters(r: &mut Recorder, m: usize) {
    let n = m.min(5);
    r.check("super-narayana displays", || {
        let p2 = poly_tq(&[(2, 0, 1), (2, 1, 2), (1, 0, 3), (1, 1, 3), (0, 0, 2), (0, 1, 1)]);
        let p3 = poly_tq(&[
            (3, 0, 1), (3, 1, 5), (3, 2, 5), (3, 3, 5), (2, 0, 6), (2, 1, 16), (2, 2, 16), (2, 3, 10),
            (1, 0, 10), (1, 1, 16), (1, 2, 16), (1, 3, 6), (0, 0, 5), (0, 1, 5), (0, 2, 5), (0, 3, 1),
        ]);
        let ok = chars::super_narayana_count(2, SignedStatistic::Sinv) == p2
            && chars::super_narayana_count(3, SignedStatistic::Sinv) == p3;
        Ok((ok, format!("P_2 = {p2}")))
    });
    r.check("super-narayana routes agree", || {
        for k in 0..=n {
            let count = chars::super_narayana_count(k, SignedStatistic::Sinv);
            if count != chars::super_narayana_sym(k)? || count != chars::super_narayana_count(k, SignedStatistic::Smaj) {
                return Ok((false, format!("n = {k}")));
            }
        }
        Ok((true, up_to(n)))
    });
    let s = m.min(6);
    r.check("schroder polynomials", || {
        let rows: [&[i64]; 4] = [&[1], &[1, 1], &[2, 3, 1], &[5, 10, 6, 1]];
        let mut ok = true;
        for (k, row) in rows.iter().enumerate() {
            ok &= chars::schroder_polynomials(k)?.by_paths == univariate(Var::T, row);
        }
        for k in 0..=s {
            ok &= chars::schroder_polynomials(k)?.agree();
            for p in chars::schroder_paths(k) {
                ok &= chars::schroder_decode(&chars::schroder_encode(&p))? == p;
            }
        }
        let w: chars::SignedParkingFunction = "1,1,-1,2,-4".parse()?;
        ok &= chars::schroder_sort(&w).to_string() == "-4,-1,1,1,2";
        Ok((ok, up_to(s)))
    });
    r.check("narayana cross-check", || {
        let mut ok = chars::lassalle_narayana(3)? == univariate(Var::Q, &[1, 3, 1]);
        for k in 1..=s {
            let lassalle = chars::lassalle_narayana(k)?;
            let from_paths = chars::narayana_from_schroder(&chars::schroder_polynomials(k)?.by_paths)?;
            let shifted = lassalle.substitute(Var::Q, &(QPoly::one() + QPoly::var(Var::T)));
            ok &= from_paths.substitute(Var::T, &QPoly::var(Var::Q)) == lassalle && shifted == chars::bar_distribution(k);
        }
        Ok((ok, up_to(s)))
    });
    let c = m.min(7);
    r.check("bar character", || {
        for k in 0..=c {
            if !chars::chi_sqsym(k)?.all_pass() {
                return Ok((false, format!("n = {k}")));
            }
        }
        Ok((true, up_to(c)))
    });
    r.check("signed character", || Ok((chars::s_character_check(m.min(4))?, up_to(m.min(4)))));
    r.check("psi is a character", || Ok((psi_character_check(n)?, format!("degree <= {n}"))));
    r.check("binomial character", || {
        let displays = chars::p_alpha(2) == univariate(Var::Alpha, &[0, 1, 3])
            && chars::p_alpha(3) == univariate(Var::Alpha, &[0, 2, 12, 16])
            && chars::p_alpha(4) == univariate(Var::Alpha, &[0, 6, 55, 150, 125]);
        let mut ok = displays;
        for k in 0..=m.min(6) {
            ok &= chars::psi_alpha(k)?.all_pass();
        }
        Ok((ok, up_to(m.min(6))))
    });
    r.check("q triangle", || {
        let rows = chars::q_triangle(n.max(4));
        let int_row = |c: &[i64]| c.iter().map(|&x| Rational::from_int(x)).collect::<Vec<_>>();
        let mut ok = rows[..4] == [int_row(&[1]), int_row(&[2, 1]), int_row(&[6, 8, 2]), int_row(&[24, 58, 37, 6])];
        for (k, row) in rows.iter().enumerate() {
            ok &= row[0] == Rational::from_int(crate::exact::factorial(k as u32 + 1));
            ok &= chars::alpha::reciprocal_p_alpha(k + 1, k as u32 + 1) == crate::QRatFun::from_poly(chars::q_n(k + 1));
        }
        Ok((ok, format!("Q_4 = {}", chars::q_n(4))))
    });
}

/// Runs one suite.
pub fn run_suite(suite: Suite, max_n: usize) -> Vec<CheckResult> {
    let mut r = Recorder { suite, results: Vec::new() };
    match suite {
        Suite::Duplicial => duplicial(&mut r, max_n),
        Suite::Triduplicial => triduplicial(&mut r, max_n),
        Suite::Bialgebra => bialgebra(&mut r, max_n),
        Suite::Rewriting => rewriting(&mut r, max_n),
        Suite::Lagrange => lagrange(&mut r, max_n),
        Suite::Intervals => intervals(&mut r, max_n),
        Suite::Characters => characters(&mut r, max_n),
    }
    r.results
}

/// Runs the suites concurrently and returns the results in canonical order.
pub fn run(suites: &[Suite], max_n: usize) -> Vec<CheckResult> {
    let mut suites = suites.to_vec();
    suites.sort();
    suites.dedup();
    std::thread::scope(|s| {
        let handles: Vec<_> = suites.iter().map(|&suite| s.spawn(move || run_suite(suite, max_n))).collect();
        handles.into_iter().flat_map(|h| h.join().expect("verification thread panicked")).collect()
    })
}
