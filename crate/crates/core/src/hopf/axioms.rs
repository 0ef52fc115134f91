//! Exhaustive checks of the operadic relations on basis elements.
//!
//! Each relation reads `(x a y) b z = x c (y d z)` for operations indexed
//! into a table; failures are reported with their operands.

use super::{cqsym, fqsym, sqsym, wqsym, Cqsym, CqsymTensor, Fqsym, Sqsym, Wqsym};
use crate::combinat::{ndpfs, packed_words, permutations, quasi_ribbons, PackedWord};
use crate::error::Result;
use crate::exact::{Echelon, LinComb};
use crate::Rational;
use std::fmt::Display;

type BinOp<'a, K> = &'a dyn Fn(&LinComb<K, i64>, &LinComb<K, i64>) -> Result<LinComb<K, i64>>;

/// `(name, (a, b), (c, d))` for `(x a y) b z = x c (y d z)`.
pub type Relation = (&'static str, (usize, usize), (usize, usize));

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomFailure {
    pub relation: String,
    pub operands: String,
}

/// Runs `relations` on every triple of nonempty basis keys of total degree at most `max_total`.
pub fn check_relations<K: Ord + Clone + Display>(
    keys_by_degree: &dyn Fn(usize) -> Vec<K>,
    max_total: usize,
    ops: &[BinOp<'_, K>],
    relations: &[Relation],
) -> Result<Vec<AxiomFailure>> {
    let keys: Vec<Vec<K>> = (0..=max_total).map(keys_by_degree).collect();
    let mut failures = Vec::new();
    for total in 3..=max_total {
        for i in 1..total - 1 {
            for j in 1..total - i {
                let k = total - i - j;
                for x in &keys[i] {
                    for y in &keys[j] {
                        for z in &keys[k] {
                            let (ex, ey, ez) = (LinComb::basis(x.clone()), LinComb::basis(y.clone()), LinComb::basis(z.clone()));
                            for &(name, (a, b), (c, d)) in relations {
                                let lhs = ops[b](&ops[a](&ex, &ey)?, &ez)?;
                                let rhs = ops[c](&ex, &ops[d](&ey, &ez)?)?;
                                if lhs != rhs {
                                    failures.push(AxiomFailure {
                                        relation: name.to_string(),
                                        operands: format!("({x}, {y}, {z})"),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(failures)
}

/// `a·b = Σ parts` on every pair of nonempty keys of total degree at most `max_total`.
fn check_splitting<K: Ord + Clone + Display>(
    keys_by_degree: &dyn Fn(usize) -> Vec<K>,
    max_total: usize,
    product: BinOp<'_, K>,
    parts: &[BinOp<'_, K>],
) -> Result<Vec<AxiomFailure>> {
    let mut failures = Vec::new();
    for total in 2..=max_total {
        for i in 1..total {
            for x in keys_by_degree(i) {
                for y in keys_by_degree(total - i) {
                    let (ex, ey) = (LinComb::basis(x.clone()), LinComb::basis(y.clone()));
                    let mut sum = LinComb::zero();
                    for p in parts {
                        sum += &p(&ex, &ey)?;
                    }
                    if sum != product(&ex, &ey)? {
                        failures.push(AxiomFailure { relation: "splitting".into(), operands: format!("({x}, {y})") });
                    }
                }
            }
        }
    }
    Ok(failures)
}

const DUPLICIAL: [Relation; 3] =
    [("(x<y)<z = x<(y<z)", (0, 0), (0, 0)), ("(x>y)>z = x>(y>z)", (1, 1), (1, 1)), ("(x>y)<z = x>(y<z)", (1, 0), (1, 0))];

/// `CQSym` with `≺ = ∘` (index 0) and `≻ = •` (index 1).
pub fn duplicial_axioms(max_total: usize) -> Result<Vec<AxiomFailure>> {
    let prec = |a: &Cqsym<i64>, b: &Cqsym<i64>| cqsym::prec(a, b);
    let succ = |a: &Cqsym<i64>, b: &Cqsym<i64>| Ok(cqsym::succ(a, b));
    check_relations(&ndpfs, max_total, &[&prec, &succ], &DUPLICIAL)
}

/// The relation absent from duplicial algebras: `(1∘1)•1 = 113` but `1∘(1•1) = 112`.
pub fn cross_relation_witness() -> Result<(Cqsym<i64>, Cqsym<i64>)> {
    let x = cqsym::x::<i64>();
    Ok((cqsym::succ(&cqsym::prec(&x, &x)?, &x), cqsym::prec(&x, &cqsym::succ(&x, &x))?))
}

/// `FQSym` with `≺`, `≻` and the product.
pub fn dendriform_axioms(max_total: usize) -> Result<Vec<AxiomFailure>> {
    let left = |a: &Fqsym<i64>, b: &Fqsym<i64>| Ok(fqsym::left(a, b));
    let right = |a: &Fqsym<i64>, b: &Fqsym<i64>| Ok(fqsym::right(a, b));
    let prod = |a: &Fqsym<i64>, b: &Fqsym<i64>| Ok(fqsym::product(a, b));
    let relations: [Relation; 4] = [
        ("(x<y)<z = x<(y.z)", (0, 0), (0, 2)),
        ("(x>y)<z = x>(y<z)", (1, 0), (1, 0)),
        ("(x.y)>z = x>(y>z)", (2, 1), (1, 1)),
        ("(x.y).z = x.(y.z)", (2, 2), (2, 2)),
    ];
    let mut failures = check_relations(&permutations, max_total, &[&left, &right, &prod], &relations)?;
    failures.extend(check_splitting(&permutations, max_total, &prod, &[&left, &right])?);
    Ok(failures)
}

/// `SQSym` with `≺` (0), `≻` (1) and `∘` (2).
pub fn triduplicial_axioms(max_total: usize) -> Result<Vec<AxiomFailure>> {
    let prec = |a: &Sqsym<i64>, b: &Sqsym<i64>| sqsym::tridup_prec(a, b);
    let succ = |a: &Sqsym<i64>, b: &Sqsym<i64>| Ok(sqsym::tridup_succ(a, b));
    let mid = |a: &Sqsym<i64>, b: &Sqsym<i64>| Ok(sqsym::tridup_mid(a, b));
    let relations: [Relation; 7] = [
        ("(x<y)<z = x<(y<z)", (0, 0), (0, 0)),
        ("(x>y)>z = x>(y>z)", (1, 1), (1, 1)),
        ("(xoy)oz = xo(yoz)", (2, 2), (2, 2)),
        ("(x>y)<z = x>(y<z)", (1, 0), (1, 0)),
        ("(xoy)<z = xo(y<z)", (2, 0), (2, 0)),
        ("(x>y)oz = x>(yoz)", (1, 2), (1, 2)),
        ("(xoy)>z = xo(y>z)", (2, 1), (2, 1)),
    ];
    check_relations(&quasi_ribbons, max_total, &[&prec, &succ, &mid], &relations)
}

/// `WQSym` with `≺` (0), `·` (1), `≻` (2) and `⊙` (3).
pub fn tridendriform_axioms(max_total: usize) -> Result<Vec<AxiomFailure>> {
    let left = |a: &Wqsym<i64>, b: &Wqsym<i64>| Ok(wqsym::third(wqsym::Third::Left, a, b));
    let mid = |a: &Wqsym<i64>, b: &Wqsym<i64>| Ok(wqsym::third(wqsym::Third::Mid, a, b));
    let right = |a: &Wqsym<i64>, b: &Wqsym<i64>| Ok(wqsym::third(wqsym::Third::Right, a, b));
    let prod = |a: &Wqsym<i64>, b: &Wqsym<i64>| Ok(wqsym::product(a, b));
    let relations: [Relation; 8] = [
        ("(x<y)<z = x<(y*z)", (0, 0), (0, 3)),
        ("(x>y)<z = x>(y<z)", (2, 0), (2, 0)),
        ("(x*y)>z = x>(y>z)", (3, 2), (2, 2)),
        ("(x>y).z = x>(y.z)", (2, 1), (2, 1)),
        ("(x<y).z = x.(y>z)", (0, 1), (1, 2)),
        ("(x.y)<z = x.(y<z)", (1, 0), (1, 0)),
        ("(x.y).z = x.(y.z)", (1, 1), (1, 1)),
        ("(x*y)*z = x*(y*z)", (3, 3), (3, 3)),
    ];
    let mut failures = check_relations(&packed_words, max_total, &[&left, &mid, &right, &prod], &relations)?;
    failures.extend(check_splitting(&packed_words, max_total, &prod, &[&left, &mid, &right])?);
    Ok(failures)
}

/// `δ(x∗y) = x⊗y + Σ x₁⊗(x₂∗y) + Σ (x∗y₁)⊗y₂` for `∗ ∈ {≺, ≻}` on basis pairs.
pub fn bialgebra_axiom(max_total: usize) -> Result<Vec<AxiomFailure>> {
    let mut failures = Vec::new();
    for total in 2..=max_total {
        for i in 1..total {
            for a in ndpfs(i) {
                for b in ndpfs(total - i) {
                    let (x, y): (Cqsym<i64>, Cqsym<i64>) = (LinComb::basis(a.clone()), LinComb::basis(b.clone()));
                    for (name, star) in [("<", true), (">", false)] {
                        let op = |u: &Cqsym<i64>, v: &Cqsym<i64>| if star { cqsym::prec(u, v) } else { Ok(cqsym::succ(u, v)) };
                        let lhs = cqsym::dup_coproduct(&op(&x, &y)?);
                        let mut rhs: CqsymTensor<i64> = x.tensor(&y);
                        rhs += &cqsym::map_right(&cqsym::dup_coproduct(&x), |x2| op(&LinComb::basis(x2.clone()), &y))?;
                        rhs += &cqsym::map_left(&cqsym::dup_coproduct(&y), |y1| op(&x, &LinComb::basis(y1.clone())))?;
                        if lhs != rhs {
                            failures.push(AxiomFailure { relation: format!("codup {name}"), operands: format!("({a}, {b})") });
                        }
                    }
                }
            }
        }
    }
    Ok(failures)
}

/// Dimensions of the tridendriform subalgebra of `WQSym` generated by `M₁`, degrees `1..=max`.
pub fn free_tridendriform_dimensions(max: usize) -> Vec<usize> {
    let to_q = |v: &Wqsym<i64>| v.map_coeffs(|&c| Rational::from(num_bigint::BigInt::from(c)));
    let mut bases: Vec<Vec<Wqsym<i64>>> = vec![Vec::new(), vec![LinComb::basis(PackedWord::new_unchecked(vec![1]))]];
    for n in 2..=max {
        let mut echelon: Echelon<PackedWord, Rational> = Echelon::new();
        let mut basis = Vec::new();
        for k in 1..n {
            for a in &bases[k] {
                for b in &bases[n - k] {
                    for which in [wqsym::Third::Left, wqsym::Third::Mid, wqsym::Third::Right] {
                        let v = wqsym::third(which, a, b);
                        if echelon.insert(&to_q(&v)) {
                            basis.push(v);
                        }
                    }
                }
            }
        }
        bases.push(basis);
    }
    bases[1..=max.max(1)].iter().map(Vec::len).take(max).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicial() {
        assert!(duplicial_axioms(5).unwrap().is_empty());
        let (l, r) = cross_relation_witness().unwrap();
        assert_eq!(l, cqsym::p("113").unwrap());
        assert_eq!(r, cqsym::p("112").unwrap());
    }

    #[test]
    fn dendriform() {
        assert!(dendriform_axioms(5).unwrap().is_empty());
    }

    #[test]
    fn triduplicial() {
        assert!(triduplicial_axioms(5).unwrap().is_empty());
    }

    #[test]
    fn tridendriform() {
        assert!(tridendriform_axioms(4).unwrap().is_empty());
    }

    #[test]
    fn bialgebra() {
        assert_eq!(bialgebra_axiom(4).unwrap(), vec![]);
    }

    #[test]
    fn a_broken_relation_is_reported() {
        let prec = |a: &Cqsym<i64>, b: &Cqsym<i64>| cqsym::prec(a, b);
        let succ = |a: &Cqsym<i64>, b: &Cqsym<i64>| Ok(cqsym::succ(a, b));
        let cross: [Relation; 1] = [("(x<y)>z = x<(y>z)", (0, 1), (0, 1))];
        let failures = check_relations(&ndpfs, 3, &[&prec, &succ], &cross).unwrap();
        assert_eq!(failures, vec![AxiomFailure { relation: cross[0].0.into(), operands: "(1, 1, 1)".into() }]);
    }

    #[test]
    fn free_tridendriform() {
        assert_eq!(free_tridendriform_dimensions(4), vec![1, 3, 11, 45]);
    }
}
