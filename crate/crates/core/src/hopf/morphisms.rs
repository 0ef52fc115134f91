//! Morphisms out of the parking-function algebras.

use super::{Cqsym, Fqsym, Pqsym, Sqsym};
use crate::combinat::word::{inverse_permutation, standardize};
use crate::combinat::{Composition, Permutation};
use crate::exact::{factorial, Field, LinComb, Ring};
use crate::symfun::{SymBasis, SymElem};

fn packed_evaluation_key(w: &[u32]) -> Composition {
    Composition::new(crate::combinat::packed_evaluation(w)).expect("no zero parts")
}

/// `i*(F_a) = F_{std(a)}`, written in the `G` basis as `G_{std(a)⁻¹}`.
pub fn istar<C: Ring>(a: &Pqsym<C>) -> Fqsym<C> {
    a.linear(|w| {
        let std = standardize(w.letters());
        LinComb::basis(Permutation::new_unchecked(inverse_permutation(&std)))
    })
}

/// `P^π ↦ S^{t(π)}`.
pub fn istar_on_cqsym<C: Ring>(a: &Cqsym<C>) -> SymElem<C> {
    SymElem::from_terms(SymBasis::S, a.linear(|pi| LinComb::basis(packed_evaluation_key(pi.letters()))))
}

/// `P_q ↦ R_I` with `I` the segment lengths of `q`.
pub fn istar_on_sqsym<C: Ring>(a: &Sqsym<C>) -> SymElem<C> {
    SymElem::from_terms(SymBasis::R, a.linear(|q| LinComb::basis(q.shape())))
}

/// `ψ(F_a) = S^{t(a)} / n!`.
pub fn psi<F: Field>(a: &Pqsym<F>) -> SymElem<F> {
    let terms = a.linear(|w| {
        let c = F::one() / F::from_int(factorial(w.len() as u32));
        LinComb::term(packed_evaluation_key(w.letters()), c)
    });
    SymElem::from_terms(SymBasis::S, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{ndpfs, quasi_ribbons};
    use crate::hopf::{cqsym, pqsym, sqsym};
    use crate::Rational;

    #[test]
    fn worked_images() {
        let a: Pqsym<i64> = LinComb::basis("131".parse().unwrap());
        // F_132 = G_132 since 132 is an involution.
        assert_eq!(istar(&a), LinComb::basis("132".parse().unwrap()));
        assert_eq!(istar_on_cqsym(&cqsym::p::<i64>("113").unwrap()), SymElem::s("21".parse().unwrap()));
        let q: Sqsym<i64> = LinComb::basis("11|3".parse().unwrap());
        assert_eq!(istar_on_sqsym(&q), SymElem::r("21".parse().unwrap()).unwrap());
    }

    #[test]
    fn psi_values() {
        let half = Rational::new(1.into(), 2.into());
        let f11: Pqsym<Rational> = LinComb::basis("11".parse().unwrap());
        assert_eq!(psi(&f11), SymElem::s("2".parse().unwrap()).scale(&half));
        let f1: Pqsym<Rational> = LinComb::basis("1".parse().unwrap());
        let prod = psi(&pqsym::product(&f1, &f1));
        assert_eq!(prod, psi(&f1).s_product(&psi(&f1)).unwrap());
        assert_eq!(prod, SymElem::s("11".parse().unwrap()));
        let unit: Pqsym<Rational> = LinComb::basis("".parse().unwrap());
        assert_eq!(psi(&unit), SymElem::one(SymBasis::S));
    }

    #[test]
    fn class_sums_refine_complete_functions() {
        // Σ over quasi-ribbons on π of R_{shape(q)} equals S^{t(π)}.
        for n in 0..=5 {
            for pi in ndpfs(n) {
                let sum: Sqsym<i64> = quasi_ribbons(n).into_iter().filter(|q| *q.word() == pi).map(|q| (q, 1)).collect();
                let lhs = istar_on_sqsym(&sum).to_s().unwrap();
                assert_eq!(lhs, istar_on_cqsym(&LinComb::basis(pi.clone())), "{pi}");
                assert_eq!(sqsym::expand_f(&sum), cqsym::expand_f(&LinComb::basis(pi)));
            }
        }
    }
}
