//! The binomial character `ψ_α` and the `Q_n` triangle.

use super::narayana::{constant, var};
use crate::combinat::{packed_evaluation, parking_functions, permutations, Composition, ParkingFunction};
use crate::error::Result;
use crate::exact::{factorial, LinComb, Ring, Var};
use crate::hopf::{pqsym, Pqsym};
use crate::lagrange::solve_g;
use crate::symfun::{cycle_enumerator, VirtualAlphabet};
use crate::{QPoly, QRatFun, Rational};
use num_traits::{One, Zero};

fn z_of(a: &ParkingFunction) -> QPoly {
    cycle_enumerator(&Composition::new(packed_evaluation(a.letters())).expect("no zero parts"))
}

/// `ψ_α(F_a) = Z_{t(a)}(α)/n!`, extended linearly.
pub fn psi_alpha_of(x: &Pqsym<i64>) -> QPoly {
    x.iter().fold(QPoly::zero(), |acc, (a, &c)| {
        let scale = Rational::new(c.into(), factorial(a.len() as u32).into());
        acc + z_of(a).scale(&scale)
    })
}

/// `α Π_{k=1}^{n−1} ((n+1)α + k)`.
pub fn p_alpha_closed(n: usize) -> QPoly {
    if n == 0 {
        return QPoly::one();
    }
    let alpha = var(Var::Alpha);
    (1..n as i64).fold(alpha.clone(), |acc, k| acc * (&alpha * &constant(n as i64 + 1) + constant(k)))
}

/// `n! ψ_α(G_n) = Σ_{a ∈ PF_n} Z_{t(a)}(α)`.
pub fn p_alpha(n: usize) -> QPoly {
    parking_functions(n).iter().fold(QPoly::zero(), |acc, a| acc + z_of(a))
}

/// `#{(a, σ) : a σ = a}` by number of cycles of `σ`, with `(aσ)_i = a_{σ(i)}`.
pub fn fixed_pair_counts(n: usize) -> Vec<i64> {
    let perms: Vec<_> = permutations(n).into_iter().map(|s| (s.cycle_count(), s)).collect();
    let mut counts = vec![0i64; n + 1];
    for a in parking_functions(n) {
        let w = a.letters();
        for (cycles, sigma) in &perms {
            if sigma.letters().iter().enumerate().all(|(i, &s)| w[s as usize - 1] == w[i]) {
                counts[*cycles] += 1;
            }
        }
    }
    counts
}

#[derive(Clone, PartialEq, Debug)]
pub struct PsiAlphaReport {
    pub p_n: QPoly,
    pub character: bool,
    pub closed_form: bool,
    /// `n! g_n(α)` on the binomial element equals `P_n(α)`.
    pub via_sym: bool,
    /// `None` above the size where pairs are counted.
    pub fixed_pairs: Option<bool>,
}

impl PsiAlphaReport {
    pub fn all_pass(&self) -> bool {
        self.character && self.closed_form && self.via_sym && self.fixed_pairs.unwrap_or(true)
    }
}

pub fn psi_alpha_character_check(max_total: usize) -> bool {
    for total in 2..=max_total {
        for k in 1..total {
            for a in parking_functions(k) {
                let fa: Pqsym<i64> = LinComb::basis(a);
                let pa = psi_alpha_of(&fa);
                for b in parking_functions(total - k) {
                    let fb: Pqsym<i64> = LinComb::basis(b);
                    if psi_alpha_of(&pqsym::product(&fa, &fb)) != &pa * &psi_alpha_of(&fb) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn psi_alpha(n: usize) -> Result<PsiAlphaReport> {
    let p_n = p_alpha(n);
    let g = solve_g::<Rational>(n)?;
    let via_sym = VirtualAlphabet::Binomial
        .evaluate(g.component(n).expect("solved through degree n"))?
        .assert_polynomial()?
        .scale(&Rational::from_int(factorial(n as u32)))
        == p_n;
    let fixed_pairs = (n <= 5).then(|| {
        let counts = fixed_pair_counts(n);
        let coeffs = p_n.univariate_coeffs(Var::Alpha).unwrap_or_default();
        (0..=n).all(|k| coeffs.get(k).cloned().unwrap_or_else(Rational::zero) == Rational::from_int(counts[k]))
    });
    Ok(PsiAlphaReport {
        character: psi_alpha_character_check(n.min(5)),
        closed_form: p_n == p_alpha_closed(n),
        via_sym,
        fixed_pairs,
        p_n,
    })
}

/// `Q_n(q) = Π_{k=2}^n ((n+1−k) q + k)`.
pub fn q_n(n: usize) -> QPoly {
    let q = var(Var::Q);
    (2..=n as i64).fold(QPoly::one(), |acc, k| acc * (&q * &constant(n as i64 + 1 - k) + constant(k)))
}

/// `(q − 1)^e P_n(1/(q − 1))` as a rational function in `q`.
pub fn reciprocal_p_alpha(n: usize, e: u32) -> QRatFun {
    let shift = var(Var::Q) - QPoly::one();
    let at = QRatFun::new(QPoly::one(), shift.clone());
    let coeffs = p_alpha_closed(n).univariate_coeffs(Var::Alpha).unwrap_or_default();
    let value = coeffs
        .iter()
        .rev()
        .fold(QRatFun::zero(), |acc, c| acc * at.clone() + QRatFun::from_poly(QPoly::constant(c.clone())));
    value.mul_poly(&shift.pow(e))
}

/// Rows `[q^0, q^1, …]` of `Q_n` for `n = 1..=n_max`.
pub fn q_triangle(n_max: usize) -> Vec<Vec<Rational>> {
    (1..=n_max).map(|n| q_n(n).univariate_coeffs(Var::Q).unwrap_or_else(|| vec![Rational::one()])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a_poly(c: &[i64]) -> QPoly {
        QPoly::univariate(Var::Alpha, &c.iter().map(|&x| Rational::from_int(x)).collect::<Vec<_>>())
    }

    fn row(c: &[i64]) -> Vec<Rational> {
        c.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn displayed_polynomials() {
        assert_eq!(p_alpha(1), a_poly(&[0, 1]));
        assert_eq!(p_alpha(2), a_poly(&[0, 1, 3]));
        assert_eq!(p_alpha(3), a_poly(&[0, 2, 12, 16]));
        assert_eq!(p_alpha(4), a_poly(&[0, 6, 55, 150, 125]));
        let f11: Pqsym<i64> = LinComb::basis("11".parse().unwrap());
        assert_eq!(psi_alpha_of(&f11), a_poly(&[0, 1, 1]).scale(&Rational::new(1.into(), 2.into())));
    }

    #[test]
    fn reports() {
        for n in 0..=6 {
            let r = psi_alpha(n).unwrap();
            assert!(r.all_pass(), "n = {n}: {r:?}");
            assert_eq!(r.fixed_pairs.is_some(), n <= 5);
        }
    }

    #[test]
    fn triangle() {
        assert_eq!(q_triangle(4), vec![row(&[1]), row(&[2, 1]), row(&[6, 8, 2]), row(&[24, 58, 37, 6])]);
        assert_eq!(q_n(2), var(Var::Q) + constant(2));
        let col1: Vec<Rational> = q_triangle(5)[1..].iter().map(|r| r[1].clone()).collect();
        assert_eq!(col1, row(&[1, 8, 58, 444]));
        for (n, r) in q_triangle(8).iter().enumerate() {
            assert_eq!(r[0], Rational::from_int(factorial(n as u32 + 1)));
        }
    }

    #[test]
    fn reciprocal_needs_exponent_n() {
        for n in 1..=8 {
            assert_eq!(reciprocal_p_alpha(n, n as u32), QRatFun::from_poly(q_n(n)));
            assert_ne!(reciprocal_p_alpha(n, n as u32 - 1), QRatFun::from_poly(q_n(n)));
        }
    }
}
