//! `PQSym`: the span of all parking functions, basis `F_a`.

use super::Pqsym;
use crate::combinat::word::{shifted_shuffle, Letter};
use crate::combinat::ParkingFunction;
use crate::error::{Error, Result};
use crate::exact::{factorial, Field, LinComb, Ring};
use std::collections::BTreeMap;

fn shuffle_sum<C: Ring>(a: &[Letter], b: &[Letter], shift: Letter) -> Pqsym<C> {
    let mut out = LinComb::zero();
    for c in shifted_shuffle(a, b, shift) {
        out.add_term(ParkingFunction::new_unchecked(c), C::one());
    }
    out
}

/// `F_a F_b = Σ_{c ∈ a ⧢ b[|a|]} F_c`; this is also the duplicial `≻`.
pub fn product<C: Ring>(x: &Pqsym<C>, y: &Pqsym<C>) -> Pqsym<C> {
    x.bilinear(y, |a, b| shuffle_sum(a.letters(), b.letters(), a.len() as Letter))
}

/// Normalised duplicial `≺`: with `m = max(a)`,
/// `F_a ≺ F_b = |a|_m! |b|_1! / (|a|_m + |b|_1)! · Σ_{c ∈ a ⧢ b[m−1]} F_c`.
pub fn dup_prec<F: Field>(x: &Pqsym<F>, y: &Pqsym<F>) -> Result<Pqsym<F>> {
    x.try_bilinear(y, |a, b| {
        if a.is_empty() {
            return Err(Error::EmptyLeftOperand { op: "PQSym ≺" });
        }
        let m = a.max_letter();
        let k = a.letters().iter().filter(|&&l| l == m).count() as u32;
        let l = b.letters().iter().filter(|&&l| l == 1).count() as u32;
        let coeff = F::from_int(factorial(k) * factorial(l)) / F::from_int(factorial(k + l));
        Ok(shuffle_sum::<F>(a.letters(), b.letters(), m - 1).scale(&coeff))
    })
}

/// Rewrites `x` in a basis of class sums `Σ_{a ∈ class(k)} F_a`.
///
/// Fails unless `x` is constant on every class it touches.
pub fn regroup<K: Ord + Clone + std::fmt::Display, C: Ring>(
    x: &Pqsym<C>,
    algebra: &'static str,
    class_of: impl Fn(&ParkingFunction) -> Result<K>,
    members: impl Fn(&K) -> Vec<ParkingFunction>,
) -> Result<LinComb<K, C>> {
    let mut seen: BTreeMap<K, C> = BTreeMap::new();
    for (a, c) in x.iter() {
        let k = class_of(a)?;
        if !seen.contains_key(&k) {
            for member in members(&k) {
                let cm = x.coeff(&member);
                if cm != *c {
                    return Err(Error::NotInSubalgebra {
                        algebra,
                        detail: format!("class {k}: F_{a} has {c} but F_{member} has {cm}"),
                    });
                }
            }
            seen.insert(k, c.clone());
        }
    }
    Ok(seen.into_iter().collect())
}
