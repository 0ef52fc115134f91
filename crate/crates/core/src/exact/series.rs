//! Truncated power series in one formal variable.

use super::scalar::Ring;
use crate::error::{Error, Result};

/// Coefficients `c_0, …, c_N` of a series truncated after degree `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> TruncSeries<C> {
    /// Pads or truncates `coeffs` to order `order`.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncSeries::new(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|i| self.coeff(i) + other.coeff(i)).collect();
        TruncSeries { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncSeries { coeffs }
    }

    /// Inverse of a series with constant term 1 (no division needed).
    pub fn inverse(&self) -> Result<Self> {
        if !self.coeff(0).is_one() {
            return Err(Error::BadConstantTerm);
        }
        let n = self.order();
        let mut b: Vec<C> = vec![C::one()];
        for k in 1..=n {
            let mut acc = C::zero();
            for i in 1..=k {
                acc = acc + self.coeff(i) * b[k - i].clone();
            }
            b.push(-acc);
        }
        Ok(TruncSeries { coeffs: b })
    }

    /// Square root of a series with constant term 1, by Newton iteration
    /// `s ← (s + p/s) / 2`, doubling the precision each round.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeff(0).is_one() {
            return Err(Error::BadConstantTerm);
        }
        let n = self.order();
        let mut s = TruncSeries::new(vec![C::one()], 0);
        let mut prec = 1;
        while prec <= n {
            prec = (2 * prec).min(n + 1);
            let p = self.truncate(prec - 1);
            let s_ext = s.truncate(prec - 1);
            let sum = s_ext.add(&p.mul(&s_ext.inverse()?));
            let coeffs = sum
                .coeffs
                .iter()
                .map(|c| {
                    c.div_int(2).ok_or_else(|| {
                        Error::InvariantViolation("square root needs division by 2".into())
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            s = TruncSeries { coeffs };
        }
        Ok(s.truncate(n))
    }
}

/// Square root of `Σ coeffs[i] z^i` through `z^order`.
pub fn series_sqrt_expand<C: Ring>(coeffs: Vec<C>, order: usize) -> Result<TruncSeries<C>> {
    TruncSeries::new(coeffs, order).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::Var;
    use crate::{QPoly, Rational};
    use num_traits::{One, Zero};

    /// Coefficient recurrence `2 s_n = p_n - Σ_{0<k<n} s_k s_{n-k}`, independent of Newton.
    fn sqrt_recurrence(p: &[Rational], order: usize) -> Vec<Rational> {
        let mut s = vec![Rational::one()];
        for n in 1..=order {
            let mut acc = p.get(n).cloned().unwrap_or_else(Rational::zero);
            for k in 1..n {
                acc = acc - s[k].clone() * s[n - k].clone();
            }
            s.push(acc.div_int(2).unwrap());
        }
        s
    }

    #[test]
    fn sqrt_of_one() {
        let s = series_sqrt_expand(vec![Rational::one()], 5).unwrap();
        assert_eq!(s, TruncSeries::new(vec![Rational::one()], 5));
    }

    #[test]
    fn catalan_from_sqrt_one_minus_four_z() {
        let p = vec![Rational::one(), Rational::from_int(-4)];
        let s = series_sqrt_expand(p.clone(), 6).unwrap();
        assert_eq!(s.coeffs(), &sqrt_recurrence(&p, 6)[..]);
        // (1 - sqrt(1 - 4z)) / (2z)
        let cat: Vec<Rational> = (1..=5).map(|n| -s.coeff(n).div_int(2).unwrap()).collect();
        let expected: Vec<Rational> = [1, 1, 2, 5, 14].iter().map(|&c| Rational::from_int(c)).collect();
        assert_eq!(cat, expected);
    }

    #[test]
    fn square_of_root_recovers_input() {
        let t = QPoly::var(Var::T);
        let one = QPoly::one();
        // (1 - tz)^2 - 4z
        let p = vec![one.clone(), &(-(&t + &t)) - &QPoly::from_int(4), &t * &t];
        let s = series_sqrt_expand(p.clone(), 7).unwrap();
        assert_eq!(s.mul(&s), TruncSeries::new(p, 7));
    }

    #[test]
    fn rejects_bad_constant_term() {
        let p = vec![Rational::from_int(2)];
        assert_eq!(series_sqrt_expand(p, 3), Err(Error::BadConstantTerm));
    }
}
