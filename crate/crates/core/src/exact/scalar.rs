//! Coefficient rings.
//!
//! Every algebra in the crate is a free module over some [`Ring`]. Integer
//! rings (`i64`, `BigInt`) are enough for the structure constants of the
//! products; the normalised duplicial product on parking functions and the
//! characters need division, which goes through [`Ring::div_int`] or the
//! [`Field`] bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_int(n: i64) -> Self;

    /// Exact division by a nonzero integer, `None` when the quotient leaves the ring.
    fn div_int(&self, n: i64) -> Option<Self>;

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }
}

pub trait Field: Ring + Div<Output = Self> {
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Ring for i64 {
    fn from_int(n: i64) -> Self {
        n
    }

    fn div_int(&self, n: i64) -> Option<Self> {
        if n != 0 && self % n == 0 {
            Some(self / n)
        } else {
            None
        }
    }
}

impl Ring for BigInt {
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }

    fn div_int(&self, n: i64) -> Option<Self> {
        if n == 0 {
            return None;
        }
        let (q, r) = self.div_rem(&BigInt::from(n));
        r.is_zero().then_some(q)
    }
}

impl Ring for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn div_int(&self, n: i64) -> Option<Self> {
        (n != 0).then(|| self / BigRational::from_integer(BigInt::from(n)))
    }
}

impl Field for BigRational {}

/// `n!` as an integer.
pub fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn catalan(n: u64) -> u64 {
    binomial(2 * n, n) / (n + 1)
}
