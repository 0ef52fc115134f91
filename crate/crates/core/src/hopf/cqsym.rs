//! `CQSym`: the span of `P^π = Σ_{a↑=π} F_a` over nondecreasing parking functions.

use super::{CqsymTensor, Cqsym, Pqsym};
use crate::combinat::word::{distinct_rearrangements, parkize};
use crate::combinat::{ndpfs, Ndpf, ParkingFunction};
use crate::error::{Error, Result};
use crate::exact::{kernel_dimension, Field, LinComb, Ring};

/// The generator `x = P¹`.
pub fn x<C: Ring>() -> Cqsym<C> {
    LinComb::basis(Ndpf::new_unchecked(vec![1]))
}

pub fn p<C: Ring>(pi: &str) -> Result<Cqsym<C>> {
    Ok(LinComb::basis(pi.parse()?))
}

/// `P^α ≻ P^β = P^{α•β}`, the usual product.
pub fn succ<C: Ring>(a: &Cqsym<C>, b: &Cqsym<C>) -> Cqsym<C> {
    a.bilinear(b, |u, v| LinComb::basis(u.succ(v)))
}

/// `P^α ≺ P^β = P^{α∘β}`.
pub fn prec<C: Ring>(a: &Cqsym<C>, b: &Cqsym<C>) -> Result<Cqsym<C>> {
    a.try_bilinear(b, |u, v| Ok(LinComb::basis(u.prec(v)?)))
}

pub fn product<C: Ring>(a: &Cqsym<C>, b: &Cqsym<C>) -> Cqsym<C> {
    succ(a, b)
}

/// `{a, b} = a ≺ b − a ≻ b`.
pub fn bracket<C: Ring>(a: &Cqsym<C>, b: &Cqsym<C>) -> Result<Cqsym<C>> {
    Ok(prec(a, b)? - succ(a, b))
}

/// `P^π ↦ Σ_{a↑ = π} F_a`.
pub fn expand_f<C: Ring>(a: &Cqsym<C>) -> Pqsym<C> {
    a.linear(|pi| {
        distinct_rearrangements(pi.letters())
            .into_iter()
            .map(|w| (ParkingFunction::new_unchecked(w), C::one()))
            .collect()
    })
}

/// Inverse of [`expand_f`] on its image.
pub fn project_p<C: Ring>(a: &Pqsym<C>) -> Result<Cqsym<C>> {
    super::pqsym::regroup(
        a,
        "CQSym",
        |w| Ok(w.sorted()),
        |pi| distinct_rearrangements(pi.letters()).into_iter().map(ParkingFunction::new_unchecked).collect(),
    )
}

fn split(pi: &Ndpf) -> impl Iterator<Item = (Ndpf, Ndpf)> + '_ {
    let w = pi.letters();
    (1..w.len()).map(move |k| {
        (Ndpf::new_unchecked(w[..k].to_vec()), Ndpf::new_unchecked(parkize(&w[k..])))
    })
}

/// Reduced duplicial coproduct
/// `δ(P^π) = Σ_{k=1}^{n−1} P^{park(π₁…π_k)} ⊗ P^{park(π_{k+1}…π_n)}`.
pub fn dup_coproduct<C: Ring>(a: &Cqsym<C>) -> CqsymTensor<C> {
    a.linear(|pi| split(pi).map(|pair| (pair, C::one())).collect())
}

/// `(δ ⊗ id) δ` and `(id ⊗ δ) δ`, as linear combinations of triples.
pub fn iterated_coproducts<C: Ring>(a: &Cqsym<C>) -> (LinComb<(Ndpf, Ndpf, Ndpf), C>, LinComb<(Ndpf, Ndpf, Ndpf), C>) {
    let d = dup_coproduct(a);
    let left = d.linear(|(u, v)| split(u).map(|(u1, u2)| ((u1, u2, v.clone()), C::one())).collect());
    let right = d.linear(|(u, v)| split(v).map(|(v1, v2)| ((u.clone(), v1, v2), C::one())).collect());
    (left, right)
}

/// Applies `f` to the right tensor factor.
pub fn map_right<C: Ring>(t: &CqsymTensor<C>, mut f: impl FnMut(&Ndpf) -> Result<Cqsym<C>>) -> Result<CqsymTensor<C>> {
    t.try_linear(|(u, v)| Ok(f(v)?.linear(|w| LinComb::basis((u.clone(), w.clone())))))
}

/// Applies `f` to the left tensor factor.
pub fn map_left<C: Ring>(t: &CqsymTensor<C>, mut f: impl FnMut(&Ndpf) -> Result<Cqsym<C>>) -> Result<CqsymTensor<C>> {
    t.try_linear(|(u, v)| Ok(f(u)?.linear(|w| LinComb::basis((w.clone(), v.clone())))))
}

/// Dimension of `ker δ` in degree `n`.
pub fn primitive_dimension<F: Field>(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::OutOfRange { what: "primitive degree", value: 0, max: 0 });
    }
    kernel_dimension(&ndpfs(n), |pi| dup_coproduct::<F>(&LinComb::basis(pi.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::catalan;
    use crate::Rational;

    fn pp(s: &str) -> Cqsym<i64> {
        p(s).unwrap()
    }

    #[test]
    fn products_from_worked_examples() {
        assert_eq!(prec(&pp("12"), &pp("113")).unwrap(), pp("12224"));
        assert_eq!(succ(&pp("12"), &pp("113")), pp("12335"));
        let one = x::<i64>();
        let lhs = succ(&prec(&one, &one).unwrap(), &one);
        let rhs = prec(&one, &succ(&one, &one)).unwrap();
        assert_eq!(lhs, pp("113"));
        assert_eq!(rhs, pp("112"));
        assert!(prec(&pp(""), &one).is_err());
    }

    #[test]
    fn expansion_and_projection() {
        assert_eq!(expand_f(&pp("11")), LinComb::basis("11".parse().unwrap()));
        assert_eq!(expand_f(&pp("12")).len(), 2);
        let e = expand_f(&(pp("12") + pp("113").scale(&3)));
        assert_eq!(project_p(&e).unwrap(), pp("12") + pp("113").scale(&3));
        let partial: Pqsym<i64> = LinComb::basis("12".parse().unwrap());
        assert!(matches!(project_p(&partial), Err(Error::NotInSubalgebra { .. })));
    }

    #[test]
    fn coproduct_values() {
        assert!(dup_coproduct(&x::<i64>()).is_zero());
        assert!(dup_coproduct(&(pp("11") - pp("12"))).is_zero());
        let expect: CqsymTensor<i64> = [
            (("1".parse().unwrap(), "12".parse().unwrap()), 1),
            (("11".parse().unwrap(), "1".parse().unwrap()), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(dup_coproduct(&pp("113")), expect);
    }

    #[test]
    fn brackets_are_the_displayed_primitives() {
        let one = x::<i64>();
        let xx = bracket(&one, &one).unwrap();
        assert_eq!(xx, pp("11") - pp("12"));
        let left = bracket(&xx, &one).unwrap();
        assert_eq!(left, pp("111") - pp("122") - pp("113") + pp("123"));
        let right = bracket(&one, &xx).unwrap();
        assert_eq!(right, pp("111") - pp("122") - pp("112") + pp("123"));
        for e in [xx, left, right] {
            assert!(dup_coproduct(&e).is_zero());
        }
    }

    #[test]
    fn primitive_dimensions_are_catalan() {
        for n in 1..=6 {
            assert_eq!(primitive_dimension::<Rational>(n).unwrap() as u64, catalan(n as u64 - 1), "n={n}");
        }
    }

    #[test]
    fn coassociative() {
        for n in 1..=5 {
            for pi in ndpfs(n) {
                let (l, r) = iterated_coproducts::<i64>(&LinComb::basis(pi));
                assert_eq!(l, r);
            }
        }
    }
}
