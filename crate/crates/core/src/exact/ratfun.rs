use super::poly::{Poly, Var};
use super::scalar::{Field, Ring};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Quotient of polynomials, kept reduced with a monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFun<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFun<F> {
    /// # Panics
    /// If `den` is zero.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFun { num, den: Poly::one() };
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let k = den.leading_coeff().inv();
        RatFun { num: num.scale(&k), den: den.scale(&k) }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFun { num: p, den: Poly::one() }
    }

    pub fn numer(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<F> {
        &self.den
    }

    pub fn normalize(&self) -> Self {
        RatFun::new(self.num.clone(), self.den.clone())
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn assert_polynomial(&self) -> Result<Poly<F>> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(Error::NonPolynomial { denominator: self.den.to_string() })
        }
    }

    pub fn substitute(&self, v: Var, p: &Poly<F>) -> Self {
        RatFun::new(self.num.substitute(v, p), self.den.substitute(v, p))
    }

    pub fn mul_poly(&self, p: &Poly<F>) -> Self {
        RatFun::new(&self.num * p, self.den.clone())
    }
}

impl<F: Field> From<Poly<F>> for RatFun<F> {
    fn from(p: Poly<F>) -> Self {
        RatFun::from_poly(p)
    }
}

impl<F: Field> Zero for RatFun<F> {
    fn zero() -> Self {
        RatFun::from_poly(Poly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RatFun<F> {
    fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }
}

impl<F: Field> Add for RatFun<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return RatFun::new(&self.num + &rhs.num, self.den);
        }
        let g = self.den.gcd(&rhs.den);
        let a = rhs.den.div_exact(&g).expect("gcd divides");
        let b = self.den.div_exact(&g).expect("gcd divides");
        RatFun::new(&(&self.num * &a) + &(&rhs.num * &b), &self.den * &a)
    }
}

impl<F: Field> Neg for RatFun<F> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFun { num: -self.num, den: self.den }
    }
}

impl<F: Field> Sub for RatFun<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Mul for RatFun<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<F: Field> Div for RatFun<F> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        RatFun::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl<F: Field> Ring for RatFun<F> {
    fn from_int(n: i64) -> Self {
        RatFun::from_poly(Poly::from_int(n))
    }

    fn div_int(&self, n: i64) -> Option<Self> {
        (n != 0).then(|| RatFun { num: self.num.scale(&F::from_int(n).inv()), den: self.den.clone() })
    }
}

impl<F: Field> Field for RatFun<F> {}

impl<F: Field> fmt::Display for RatFun<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<F: Field> fmt::Debug for RatFun<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QPoly, QRatFun};

    fn x() -> QPoly {
        QPoly::var(Var::X)
    }
    fn q() -> QPoly {
        QPoly::var(Var::Q)
    }
    fn one() -> QPoly {
        QPoly::one()
    }

    #[test]
    fn normalization_cancels_common_factors() {
        let r = QRatFun::new(&one() - &x().pow(2), &one() - &x());
        assert_eq!(r.assert_polynomial().unwrap(), &one() + &x());
        let s = QRatFun::new(&one() - &q(), &one() - &q());
        assert!(s.is_one());
        assert_eq!(s.normalize(), s);
    }

    #[test]
    fn non_polynomial_is_reported() {
        let r = QRatFun::new(one(), &one() - &q());
        assert!(matches!(r.assert_polynomial(), Err(Error::NonPolynomial { .. })));
    }

    #[test]
    fn field_arithmetic() {
        let a = QRatFun::new(&one() - &x(), &one() - &q());
        let b = QRatFun::new(one(), &one() + &q());
        let sum = a.clone() + b.clone();
        assert_eq!(sum.clone() - b.clone(), a);
        assert_eq!((a.clone() * b.clone()) / b, a);
        assert_eq!(a.clone() - a, QRatFun::zero());
    }
}
