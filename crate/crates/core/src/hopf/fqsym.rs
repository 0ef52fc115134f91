//! `FQSym` in the `G` basis, with its dendriform splitting.

use super::Fqsym;
use crate::combinat::word::{inverse_permutation, Letter};
use crate::combinat::Permutation;
use crate::exact::{LinComb, Ring};
use itertools::Itertools;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Half {
    Left,
    Right,
    Both,
}

/// `γ = uv` with `std(u) = α`, `std(v) = β`, selected by comparing maxima.
fn convolution<C: Ring>(alpha: &Permutation, beta: &Permutation, half: Half) -> Fqsym<C> {
    let (k, l) = (alpha.len(), beta.len());
    let n = k + l;
    let mut out = LinComb::zero();
    for values in (1..=n as Letter).combinations(k) {
        let left_has_max = values.last() == Some(&(n as Letter));
        let keep = match half {
            Half::Both => true,
            Half::Left => left_has_max,
            Half::Right => !left_has_max,
        };
        if !keep || (k == 0 && half == Half::Left) {
            continue;
        }
        let rest: Vec<Letter> = (1..=n as Letter).filter(|v| !values.contains(v)).collect();
        let mut gamma: Vec<Letter> = alpha.letters().iter().map(|&a| values[a as usize - 1]).collect();
        gamma.extend(beta.letters().iter().map(|&b| rest[b as usize - 1]));
        out.add_term(Permutation::new_unchecked(gamma), C::one());
    }
    out
}

pub fn product<C: Ring>(a: &Fqsym<C>, b: &Fqsym<C>) -> Fqsym<C> {
    a.bilinear(b, |u, v| convolution(u, v, Half::Both))
}

/// `G_α ≺ G_β`: terms with `max(v) < max(u)`.
pub fn left<C: Ring>(a: &Fqsym<C>, b: &Fqsym<C>) -> Fqsym<C> {
    a.bilinear(b, |u, v| convolution(u, v, Half::Left))
}

/// `G_α ≻ G_β`: terms with `max(v) ≥ max(u)`.
pub fn right<C: Ring>(a: &Fqsym<C>, b: &Fqsym<C>) -> Fqsym<C> {
    a.bilinear(b, |u, v| convolution(u, v, Half::Right))
}

/// `F_σ = G_{σ⁻¹}`.
pub fn f<C: Ring>(sigma: &Permutation) -> Fqsym<C> {
    LinComb::basis(Permutation::new_unchecked(inverse_permutation(sigma.letters())))
}

/// `⟨G_σ, G_τ⟩ = [σ = τ⁻¹]`, extended bilinearly.
pub fn scalar<C: Ring>(a: &Fqsym<C>, b: &Fqsym<C>) -> C {
    a.iter().fold(C::zero(), |acc, (s, c)| acc + c.clone() * b.coeff(&s.inverse()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Fqsym<i64> {
        LinComb::basis(s.parse().unwrap())
    }

    #[test]
    fn generator_products() {
        assert_eq!(product(&g("1"), &g("1")), g("12") + g("21"));
        assert_eq!(left(&g("1"), &g("1")), g("21"));
        assert_eq!(right(&g("1"), &g("1")), g("12"));
    }

    #[test]
    fn duality() {
        assert_eq!(f::<i64>(&"231".parse().unwrap()), g("312"));
        assert_eq!(scalar(&g("12"), &g("12")), 1);
        assert_eq!(scalar(&g("213"), &g("132")), 0);
        assert_eq!(scalar(&g("231"), &g("312")), 1);
    }

    #[test]
    fn halves_sum_to_product() {
        for a in ["1", "12", "21", "132"] {
            for b in ["1", "21", "123"] {
                assert_eq!(left(&g(a), &g(b)) + right(&g(a), &g(b)), product(&g(a), &g(b)));
            }
        }
    }
}
