use serde_json::Value;
use std::collections::BTreeMap;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parkhopf"))
        .args(args)
        .env_remove("PARKHOPF_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["schema"], "parkhopf/1");
    v
}

#[test]
fn series_contains_g4() {
    let v = json(&["series", "--which", "g", "--degree", "4"]);
    let g4 = v["components"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["degree"] == 4)
        .expect("degree 4 present");
    let terms: BTreeMap<String, String> = g4["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["key"].as_str().unwrap().to_owned(), t["coeff"].as_str().unwrap().to_owned()))
        .collect();
    let expected: BTreeMap<String, String> =
        [("4", "1"), ("31", "3"), ("22", "2"), ("13", "1"), ("211", "3"), ("121", "2"), ("112", "1"), ("1111", "1")]
            .iter()
            .map(|&(k, c)| (k.to_owned(), c.to_owned()))
            .collect();
    assert_eq!(terms, expected);
}

#[test]
fn worked_example_tree() {
    let out = run(&["bijection", "--direction", "ndpf-to-tree", "--input", "1133444"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "((.,(.,.)),((.,.),(.,(.,.))))");
    let back = run(&["bijection", "--direction", "tree-to-ndpf", "--input", "((.,(.,.)),((.,.),(.,(.,.))))"]);
    assert_eq!(stdout(&back).trim(), "1133444");
}

#[test]
fn encodings() {
    let out = run(&["bijection", "--direction", "dyck-encode", "--input", "uuududdudd"]);
    assert_eq!(stdout(&out).trim(), "11124");
    let out = run(&["bijection", "--direction", "schroder-encode", "--input", "uuhuddhd"]);
    assert_eq!(stdout(&out).trim(), "1,1,-1,2,-4");
}

#[test]
fn qn_row() {
    let out = run(&["poly", "--which", "qn", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "24,58,37,6");
}

#[test]
fn enumerate_formats() {
    let lines = stdout(&run(&["enumerate", "--family", "ndpf", "--n", "4"]));
    assert_eq!(lines.lines().count(), 14);
    let csv = stdout(&run(&["enumerate", "--family", "ndpf", "--n", "3", "--format", "csv"]));
    assert_eq!(csv.lines().next(), Some("index,value"));
    assert_eq!(csv.lines().count(), 6);
    let v = json(&["enumerate", "--family", "qribbon", "--n", "3", "--format", "json"]);
    assert_eq!(v.to_string().matches("\"schema\"").count(), 1);
}

#[test]
fn tables() {
    let out = stdout(&run(&["table", "--which", "a060693", "--n-max", "3"]));
    assert_eq!(out.trim(), "0,1\n1,1,1\n2,2,3,1\n3,5,10,6,1");
    let out = stdout(&run(&["table", "--which", "qn-triangle", "--n-max", "4"]));
    assert_eq!(out.lines().last(), Some("4,24,58,37,6"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["series", "--which", "h", "--degree", "2"]).status.code(), Some(2));
    assert_eq!(run(&["bijection", "--direction", "tree-to-ndpf", "--input", "(.,."]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--family", "pf", "--n", "9"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn max_n_comes_from_the_environment() {
    let capped = Command::new(env!("CARGO_BIN_EXE_parkhopf"))
        .args(["enumerate", "--family", "ndpf", "--n", "4"])
        .env("PARKHOPF_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    let raised = Command::new(env!("CARGO_BIN_EXE_parkhopf"))
        .args(["enumerate", "--family", "ndpf", "--n", "9"])
        .env("PARKHOPF_MAX_N", "9")
        .output()
        .unwrap();
    assert_eq!(raised.status.code(), Some(0));
    assert_eq!(String::from_utf8(raised.stdout).unwrap().lines().count(), 4862);
}

#[test]
fn verify_all_is_deterministic() {
    let first = run(&["verify", "--suite", "all", "--max-n", "5"]);
    let second = run(&["verify", "--suite", "all", "--max-n", "5"]);
    assert_eq!(first.status.code(), Some(0), "{}", stdout(&first));
    assert_eq!(first.stdout, second.stdout);
    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["schema"], "parkhopf/1");
    assert_eq!(v["failures"], 0);
    let suites: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["suite"].as_str().unwrap()).collect();
    let order = ["duplicial", "triduplicial", "bialgebra", "rewriting", "lagrange", "intervals", "characters"];
    let ranks: Vec<usize> = suites.iter().map(|s| order.iter().position(|o| o == s).unwrap()).collect();
    assert!(ranks.windows(2).all(|w| w[0] <= w[1]), "suites out of canonical order");
    assert_eq!(ranks.first(), Some(&0));
    assert_eq!(ranks.last(), Some(&6));
}
