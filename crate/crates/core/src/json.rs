//! JSON encodings shared by the command line tools.

use crate::exact::{LinComb, Ring};
use crate::symfun::SymElem;
use crate::verify::CheckResult;
use crate::Rational;
use serde_json::{json, Map, Value};
use std::fmt::Display;

pub const SCHEMA: &str = "parkhopf/1";

/// Wraps `body` (an object) with the schema tag.
pub fn document(body: Value) -> Value {
    let mut out = Map::new();
    out.insert("schema".into(), Value::from(SCHEMA));
    if let Value::Object(fields) = body {
        out.extend(fields);
    }
    Value::Object(out)
}

/// `{basis, terms: [{key, coeff}]}` with keys in canonical order.
pub fn element<K: Ord + Clone + Display, C: Ring + Display>(basis: &str, x: &LinComb<K, C>) -> Value {
    let terms: Vec<Value> = x.iter().map(|(k, c)| json!({ "key": k.to_string(), "coeff": c.to_string() })).collect();
    json!({ "basis": basis, "terms": terms })
}

pub fn sym_element<C: Ring + Display>(x: &SymElem<C>) -> Value {
    element(x.basis().name(), x.terms())
}

pub fn row(coeffs: &[Rational]) -> Value {
    Value::from(coeffs.iter().map(ToString::to_string).collect::<Vec<_>>())
}

pub fn check_results(results: &[CheckResult]) -> Value {
    let checks: Vec<Value> = results
        .iter()
        .map(|c| json!({ "suite": c.suite.name(), "name": c.name, "passed": c.passed, "detail": c.detail }))
        .collect();
    let failures = results.iter().filter(|c| !c.passed).count();
    json!({ "passed": failures == 0, "failures": failures, "checks": checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::cqsym;

    #[test]
    fn element_layout() {
        let x = cqsym::p::<i64>("11").unwrap() - cqsym::p::<i64>("12").unwrap();
        let v = document(json!({ "element": element("P", &x) }));
        assert_eq!(
            v.to_string(),
            r#"{"schema":"parkhopf/1","element":{"basis":"P","terms":[{"key":"11","coeff":"1"},{"key":"12","coeff":"-1"}]}}"#
        );
    }
}
