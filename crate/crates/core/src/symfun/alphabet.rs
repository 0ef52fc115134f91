//! Commutative images of `Sym` on the three virtual alphabets in use.

use super::{SymBasis, SymElem};
use crate::combinat::Composition;
use crate::error::{Error, Result};
use crate::exact::{Poly, Ring, Var};
use crate::{QPoly, QRatFun, Rational};
use num_traits::{One, Zero};

/// A specialization of symmetric functions given by its power sums.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VirtualAlphabet {
    /// `p_n = α`.
    Binomial,
    /// `p_n = (1 − xⁿ)/(1 − qⁿ)`.
    OneMinusXOverOneMinusQ,
    /// `p_n = m(1 − xⁿ)`.
    MTimesOneMinusX(i64),
}

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

/// `1 − vⁿ`.
fn one_minus_power(v: Var, n: u32) -> QPoly {
    QPoly::one() - QPoly::var(v).pow(n)
}

impl VirtualAlphabet {
    pub fn power_sum(self, n: u32) -> QRatFun {
        assert!(n >= 1, "power sums start at p_1");
        match self {
            VirtualAlphabet::Binomial => QRatFun::from_poly(QPoly::var(Var::Alpha)),
            VirtualAlphabet::OneMinusXOverOneMinusQ => {
                QRatFun::new(one_minus_power(Var::X, n), one_minus_power(Var::Q, n))
            }
            VirtualAlphabet::MTimesOneMinusX(m) => QRatFun::from_poly(one_minus_power(Var::X, n).scale(&q(m))),
        }
    }

    /// `h_0, …, h_max` by the Newton recurrence `m h_m = Σ_{k=1}^m p_k h_{m−k}`.
    pub fn complete(self, max: u32) -> Vec<QRatFun> {
        let p: Vec<QRatFun> = (1..=max).map(|k| self.power_sum(k)).collect();
        let mut h = vec![QRatFun::one()];
        for m in 1..=max as usize {
            let mut acc = QRatFun::zero();
            for k in 1..=m {
                acc = acc + p[k - 1].clone() * h[m - k].clone();
            }
            h.push(acc.div_int(m as i64).expect("division by a nonzero integer"));
        }
        h
    }

    /// `e_0, …, e_max` from `Σ_k (−1)^k e_k h_{n−k} = 0`.
    pub fn elementary(self, max: u32) -> Vec<QRatFun> {
        let h = self.complete(max);
        let mut e = vec![QRatFun::one()];
        for n in 1..=max as usize {
            let mut acc = QRatFun::zero();
            for k in 0..n {
                let term = e[k].clone() * h[n - k].clone();
                acc = if (n - k) % 2 == 1 { acc + term } else { acc - term };
            }
            e.push(acc);
        }
        e
    }

    /// Image of `a` under the commutative specialization `S_n ↦ h_n`.
    pub fn evaluate(self, a: &SymElem<Rational>) -> Result<QRatFun> {
        let a = a.to_basis(SymBasis::S)?;
        if a.terms().keys().any(Composition::is_extended) {
            return Err(Error::ExtendedKey);
        }
        let max = a.terms().keys().flat_map(|i| i.parts().iter().copied()).max().unwrap_or(0);
        let h = self.complete(max);
        let mut out = QRatFun::zero();
        for (i, c) in a.terms().iter() {
            let mut term = QRatFun::from_poly(QPoly::constant(c.clone()));
            for &part in i.parts() {
                term = term * h[part as usize].clone();
            }
            out = out + term;
        }
        Ok(out)
    }
}

/// `α(α+1)⋯(α+m−1)`.
pub fn rising_factorial(m: u32) -> QPoly {
    (0..m as i64).fold(QPoly::one(), |acc, k| acc * (QPoly::var(Var::Alpha) + QPoly::constant(q(k))))
}

/// Cycle enumerator `Z_I(α) = Π_k α(α+1)⋯(α+i_k−1)` of the Young subgroup `S_I`.
pub fn cycle_enumerator(i: &Composition) -> QPoly {
    i.parts().iter().fold(Poly::one(), |acc, &m| acc * rising_factorial(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{compositions, permutations};
    use crate::exact::factorial;

    fn alpha_poly(coeffs: &[i64]) -> QPoly {
        QPoly::univariate(Var::Alpha, &coeffs.iter().map(|&c| q(c)).collect::<Vec<_>>())
    }

    /// `C(α + k, n)` as a polynomial in α.
    fn binom_alpha(shift: i64, n: u32) -> QPoly {
        let mut p = QPoly::one();
        for j in 0..n as i64 {
            p = p * (QPoly::var(Var::Alpha) + QPoly::constant(q(shift - j)));
        }
        p.div_int(factorial(n)).unwrap()
    }

    #[test]
    fn binomial_element() {
        let h = VirtualAlphabet::Binomial.complete(6);
        let e = VirtualAlphabet::Binomial.elementary(6);
        for n in 0..=6u32 {
            assert_eq!(h[n as usize].assert_polynomial().unwrap(), binom_alpha(n as i64 - 1, n));
            assert_eq!(e[n as usize].assert_polynomial().unwrap(), binom_alpha(0, n));
        }
    }

    #[test]
    fn first_complete_is_first_power_sum() {
        let a = VirtualAlphabet::OneMinusXOverOneMinusQ;
        assert_eq!(a.complete(1)[1], a.power_sum(1));
        // Denominators are monic in the leading monomial.
        assert_eq!(a.power_sum(2).to_string(), "(-1 + x^2)/(-1 + q^2)");
    }

    #[test]
    fn cycle_enumerators_by_brute_force() {
        assert_eq!(cycle_enumerator(&"2".parse().unwrap()), alpha_poly(&[0, 1, 1]));
        assert_eq!(cycle_enumerator(&"11".parse().unwrap()), alpha_poly(&[0, 0, 1]));
        assert_eq!(cycle_enumerator(&"3".parse().unwrap()), alpha_poly(&[0, 2, 3, 1]));
        // Σ over the Young subgroup of α^{cycles}, enumerated inside S_n.
        for n in 0..=5 {
            for i in compositions(n) {
                let blocks: Vec<usize> = i
                    .parts()
                    .iter()
                    .enumerate()
                    .flat_map(|(b, &p)| std::iter::repeat(b).take(p as usize))
                    .collect();
                let mut counts = vec![0i64; n as usize + 1];
                for sigma in permutations(n as usize) {
                    let stable = sigma.letters().iter().enumerate().all(|(p, &v)| blocks[p] == blocks[v as usize - 1]);
                    if stable {
                        counts[sigma.cycle_count()] += 1;
                    }
                }
                assert_eq!(cycle_enumerator(&i), alpha_poly(&counts), "{i}");
            }
        }
    }

    #[test]
    fn young_subgroup_relation() {
        // Z_I / Π i_k! = Π h_{i_k}(α).
        for n in 0..=6 {
            for i in compositions(n) {
                let denom: i64 = i.parts().iter().map(|&p| factorial(p)).product();
                let lhs = cycle_enumerator(&i).div_int(denom).unwrap();
                let rhs = VirtualAlphabet::Binomial.evaluate(&SymElem::s(i.clone())).unwrap();
                assert_eq!(QRatFun::from_poly(lhs), rhs);
            }
        }
    }

    #[test]
    fn evaluation_is_multiplicative() {
        let alphabets = [
            VirtualAlphabet::Binomial,
            VirtualAlphabet::OneMinusXOverOneMinusQ,
            VirtualAlphabet::MTimesOneMinusX(3),
        ];
        for a in alphabets {
            for i in compositions(3) {
                for j in compositions(2) {
                    let x = SymElem::<Rational>::r(i.clone()).unwrap();
                    let y = SymElem::<Rational>::r(j.clone()).unwrap();
                    let prod = a.evaluate(&x.ribbon_product(&y).unwrap()).unwrap();
                    assert_eq!(prod, a.evaluate(&x).unwrap() * a.evaluate(&y).unwrap());
                }
            }
        }
        assert!(VirtualAlphabet::Binomial.evaluate(&SymElem::s("10".parse().unwrap())).is_err());
    }
}
