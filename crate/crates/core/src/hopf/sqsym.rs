//! `SQSym`: the span of `P_q = Σ_{P(a)=q} F_a` over parking quasi-ribbons.

use super::{pqsym, Pqsym, Sqsym};
use crate::combinat::{hypoplactic_quasi_ribbon, QuasiRibbon};
use crate::error::Result;
use crate::exact::{LinComb, Ring};

/// The generator `P_1`.
pub fn x<C: Ring>() -> Sqsym<C> {
    LinComb::basis("1".parse().expect("valid"))
}

pub fn expand_f<C: Ring>(a: &Sqsym<C>) -> Pqsym<C> {
    a.linear(|q| q.class_members().into_iter().map(|w| (w, C::one())).collect())
}

/// Inverse of [`expand_f`]; fails when `a` is not a combination of class sums.
pub fn project_p<C: Ring>(a: &Pqsym<C>) -> Result<Sqsym<C>> {
    pqsym::regroup(a, "SQSym", hypoplactic_quasi_ribbon, QuasiRibbon::class_members)
}

/// Product inherited from `PQSym`, computed on the `F` side and regrouped.
pub fn product<C: Ring>(a: &Sqsym<C>, b: &Sqsym<C>) -> Result<Sqsym<C>> {
    project_p(&pqsym::product(&expand_f(a), &expand_f(b)))
}

pub fn tridup_succ<C: Ring>(a: &Sqsym<C>, b: &Sqsym<C>) -> Sqsym<C> {
    a.bilinear(b, |u, v| LinComb::basis(u.tridup_succ(v)))
}

pub fn tridup_prec<C: Ring>(a: &Sqsym<C>, b: &Sqsym<C>) -> Result<Sqsym<C>> {
    a.try_bilinear(b, |u, v| Ok(LinComb::basis(u.tridup_prec(v)?)))
}

pub fn tridup_mid<C: Ring>(a: &Sqsym<C>, b: &Sqsym<C>) -> Sqsym<C> {
    a.bilinear(b, |u, v| LinComb::basis(u.tridup_mid(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::quasi_ribbons;
    use std::collections::BTreeSet;

    fn q(s: &str) -> Sqsym<i64> {
        LinComb::basis(s.parse().unwrap())
    }

    #[test]
    fn class_sums() {
        let expect: Pqsym<i64> = ["131", "311"].iter().map(|k| (k.parse().unwrap(), 1)).collect();
        assert_eq!(expand_f(&q("11|3")), expect);
        assert_eq!(expand_f(&q("113")), LinComb::basis("113".parse().unwrap()));
    }

    #[test]
    fn product_regroups() {
        assert_eq!(product(&x(), &x()).unwrap(), q("12") + q("1|2"));
        for a in 0..=3 {
            for b in 0..=(5 - a).min(3) {
                for u in quasi_ribbons(a) {
                    for v in quasi_ribbons(b) {
                        product(&LinComb::<_, i64>::basis(u.clone()), &LinComb::basis(v.clone()))
                            .unwrap_or_else(|e| panic!("{u} {v}: {e}"));
                    }
                }
            }
        }
    }

    #[test]
    fn generator_spans_everything_in_degree_three() {
        let mut level: Vec<BTreeSet<QuasiRibbon>> = vec![BTreeSet::new(), [x::<i64>().keys().next().unwrap().clone()].into()];
        for n in 2..=3 {
            let mut next = BTreeSet::new();
            for k in 1..n {
                for u in &level[k] {
                    for v in &level[n - k] {
                        next.insert(u.tridup_succ(v));
                        next.insert(u.tridup_mid(v));
                        next.insert(u.tridup_prec(v).unwrap());
                    }
                }
            }
            level.push(next);
        }
        assert_eq!(level[3].len(), 11);
        assert_eq!(level[3], quasi_ribbons(3).into_iter().collect());
    }
}
