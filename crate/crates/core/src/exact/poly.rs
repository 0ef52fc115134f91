//! Sparse polynomials over the fixed variable set `q < t < x < z < α`.

use super::lincomb::LinComb;
use super::scalar::{Field, Ring};
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub const NVARS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q = 0,
    T = 1,
    X = 2,
    Z = 3,
    Alpha = 4,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Q, Var::T, Var::X, Var::Z, Var::Alpha];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::X => "x",
            Var::Z => "z",
            Var::Alpha => "α",
        }
    }
}

/// Exponent vector. Ordered by total degree, then with earlier variables
/// weighing more, which is the printing order `1, q, t, qt, t^2, ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, exp: u32) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = exp;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn with_exp(mut self, v: Var, e: u32) -> Self {
        self.0[v.index()] = e;
        self
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; NVARS]
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in Var::ALL {
            match self.exp(v) {
                0 => {}
                1 => write!(f, "{}", v.name())?,
                e => write!(f, "{}^{}", v.name(), e)?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C: Ring> {
    terms: LinComb<Monomial, C>,
}

impl<C: Ring> Poly<C> {
    pub fn constant(c: C) -> Self {
        Poly { terms: LinComb::term(Monomial::one(), c) }
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(C::one(), Monomial::var(v, 1))
    }

    pub fn monomial(c: C, m: Monomial) -> Self {
        Poly { terms: LinComb::term(m, c) }
    }

    /// `Σ coeffs[i] · v^i`.
    pub fn univariate(v: Var, coeffs: &[C]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (Monomial::var(v, i as u32), c.clone()))
            .collect();
        Poly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.coeff(m)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    /// Highest variable occurring in the polynomial.
    pub fn main_var(&self) -> Option<Var> {
        Var::ALL.into_iter().rev().find(|&v| self.degree_in(v) > 0)
    }

    pub fn involves(&self, v: Var) -> bool {
        self.degree_in(v) > 0
    }

    pub fn scale(&self, c: &C) -> Self {
        Poly { terms: self.terms.scale(c) }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Poly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    /// Coefficients as a polynomial in `v`; entry `i` is free of `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly<C>> {
        let mut out = vec![Poly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in self.terms.iter() {
            let e = m.exp(v) as usize;
            out[e].terms.add_term(m.with_exp(v, 0), c.clone());
        }
        if self.is_zero() {
            out.clear();
        }
        out
    }

    /// Scalar coefficients of a polynomial in `v` alone.
    pub fn univariate_coeffs(&self, v: Var) -> Option<Vec<C>> {
        if self.terms.keys().any(|m| m.total_degree() != m.exp(v)) {
            return None;
        }
        let mut out = vec![C::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in self.terms.iter() {
            out[m.exp(v) as usize] = c.clone();
        }
        Some(out)
    }

    pub fn leading_coeff_in(&self, v: Var) -> Poly<C> {
        self.coeffs_in(v).pop().unwrap_or_else(Poly::zero)
    }

    /// Replaces `v` by `p`.
    pub fn substitute(&self, v: Var, p: &Poly<C>) -> Poly<C> {
        let mut powers: Vec<Poly<C>> = vec![Poly::one()];
        let mut out = Poly::zero();
        for (m, c) in self.terms.iter() {
            let e = m.exp(v) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * p;
                powers.push(next);
            }
            let rest = Poly::monomial(c.clone(), m.with_exp(v, 0));
            out = out + &rest * &powers[e];
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly<C> {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl FnMut(&C) -> D) -> Poly<D> {
        Poly { terms: self.terms.map_coeffs(f) }
    }

    fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    /// Coefficient of the largest monomial (zero for the zero polynomial).
    pub fn leading_coeff(&self) -> C {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(C::zero)
    }
}

impl<F: Field> Poly<F> {
    /// Divides by the coefficient of the largest monomial.
    pub fn monic(&self) -> Poly<F> {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv()),
            None => Poly::zero(),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly<F>) -> Option<Poly<F>> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.is_constant() {
            return Some(self.scale(&d.constant_term().inv()));
        }
        let v = d.main_var().expect("non-constant");
        let dc = d.coeffs_in(v);
        let dd = dc.len() - 1;
        let lead_d = &dc[dd];
        let mut r = self.clone();
        let mut q = Poly::zero();
        while !r.is_zero() {
            let rc = r.coeffs_in(v);
            let dr = rc.len() - 1;
            if dr < dd {
                return None;
            }
            let lead = rc[dr].div_exact(lead_d)?;
            let t = lead.mul_monomial(&Monomial::var(v, (dr - dd) as u32));
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly<F>) -> Poly<F> {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Poly::one();
        }
        let v = self.main_var().max(other.main_var()).expect("non-constant");
        if !self.involves(v) {
            return self.gcd(&other.content_in(v));
        }
        if !other.involves(v) {
            return self.content_in(v).gcd(other);
        }
        let (ca, cb) = (self.content_in(v), other.content_in(v));
        let c = ca.gcd(&cb);
        let pa = self.div_exact(&ca).expect("content divides");
        let pb = other.div_exact(&cb).expect("content divides");
        let g = if pa.main_var() == Some(v) && only_in(&pa, v) && only_in(&pb, v) {
            euclid_univariate(pa, pb, v)
        } else {
            primitive_prs(pa, pb, v)
        };
        (&c * &g).monic()
    }

    /// Gcd of the coefficients with respect to `v`.
    pub fn content_in(&self, v: Var) -> Poly<F> {
        self.coeffs_in(v)
            .iter()
            .filter(|c| !c.is_zero())
            .fold(Poly::zero(), |g, c| if g.is_one() { g } else { g.gcd(c) })
    }

    fn primitive_part_in(&self, v: Var) -> Poly<F> {
        let c = self.content_in(v);
        self.div_exact(&c).expect("content divides")
    }
}

fn only_in<F: Field>(p: &Poly<F>, v: Var) -> bool {
    p.univariate_coeffs(v).is_some()
}

fn euclid_univariate<F: Field>(a: Poly<F>, b: Poly<F>, v: Var) -> Poly<F> {
    let (mut u, mut w) = if a.degree_in(v) >= b.degree_in(v) { (a, b) } else { (b, a) };
    while !w.is_zero() {
        let r = rem_univariate(&u, &w, v);
        u = w;
        w = r.monic();
    }
    u.monic()
}

fn rem_univariate<F: Field>(u: &Poly<F>, w: &Poly<F>, v: Var) -> Poly<F> {
    let dw = w.degree_in(v);
    let lw = w.leading_coeff_in(v).constant_term().inv();
    let mut r = u.clone();
    while !r.is_zero() && r.degree_in(v) >= dw {
        let dr = r.degree_in(v);
        let lr = r.leading_coeff_in(v).constant_term();
        let t = Poly::monomial(lr * lw.clone(), Monomial::var(v, dr - dw));
        r = &r - &(&t * w);
    }
    r
}

fn pseudo_rem<F: Field>(u: &Poly<F>, w: &Poly<F>, v: Var) -> Poly<F> {
    let dw = w.degree_in(v);
    let lw = w.leading_coeff_in(v);
    let mut r = u.clone();
    while !r.is_zero() && r.degree_in(v) >= dw {
        let dr = r.degree_in(v);
        let lr = r.leading_coeff_in(v).mul_monomial(&Monomial::var(v, dr - dw));
        r = &(&r * &lw) - &(&lr * w);
    }
    r
}

fn primitive_prs<F: Field>(a: Poly<F>, b: Poly<F>, v: Var) -> Poly<F> {
    let (mut u, mut w) = if a.degree_in(v) >= b.degree_in(v) { (a, b) } else { (b, a) };
    loop {
        let r = pseudo_rem(&u, &w, v);
        if r.is_zero() {
            return w.primitive_part_in(v);
        }
        if r.degree_in(v) == 0 {
            return Poly::one();
        }
        u = w;
        w = r.primitive_part_in(v);
    }
}

impl<C: Ring> Zero for Poly<C> {
    fn zero() -> Self {
        Poly { terms: LinComb::zero() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
}

impl<C: Ring> One for Poly<C> {
    fn one() -> Self {
        Poly::constant(C::one())
    }
}

impl<C: Ring> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Self) -> Poly<C> {
        Poly { terms: &self.terms + &rhs.terms }
    }
}

impl<C: Ring> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Self) -> Poly<C> {
        Poly { terms: &self.terms - &rhs.terms }
    }
}

impl<C: Ring> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Self) -> Poly<C> {
        Poly { terms: self.terms.bilinear(&rhs.terms, |a, b| LinComb::basis(a.mul(b))) }
    }
}

impl<C: Ring> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Self) -> Poly<C> {
        &self + &rhs
    }
}

impl<C: Ring> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Self) -> Poly<C> {
        &self - &rhs
    }
}

impl<C: Ring> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Self) -> Poly<C> {
        &self * &rhs
    }
}

impl<C: Ring> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly { terms: -self.terms }
    }
}

impl<C: Ring> Ring for Poly<C> {
    fn from_int(n: i64) -> Self {
        Poly::constant(C::from_int(n))
    }

    fn div_int(&self, n: i64) -> Option<Self> {
        let mut terms = LinComb::zero();
        for (m, c) in self.terms.iter() {
            terms.add_term(*m, c.div_int(n)?);
        }
        Some(Poly { terms })
    }
}

fn split_sign(s: String) -> (bool, String) {
    match s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, s),
    }
}

impl<C: Ring> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = split_sign(c.to_string());
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{m}")?;
            } else if mag.contains(['/', ' ', '+', '-']) {
                write!(f, "({mag}){m}")?;
            } else {
                write!(f, "{mag}{m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = Poly<Rational>;

    fn q() -> P {
        P::var(Var::Q)
    }
    fn t() -> P {
        P::var(Var::T)
    }
    fn c(n: i64) -> P {
        P::from_int(n)
    }

    #[test]
    fn printing_is_graded_with_q_before_t() {
        // (1+2q)t^2 + (3+3q)t + (2+q)
        let p = &(&(&c(1) + &(&c(2) * &q())) * &t().pow(2))
            + &(&(&(&c(3) + &(&c(3) * &q())) * &t()) + &(&c(2) + &q()));
        assert_eq!(p.to_string(), "2 + q + 3t + 3qt + t^2 + 2qt^2");
        let r = &c(1) - &P::var(Var::X);
        assert_eq!(r.to_string(), "1 - x");
        let half = P::constant(Rational::from_int(1).div_int(2).unwrap());
        assert_eq!((&half * &P::var(Var::Alpha)).to_string(), "(1/2)α");
    }

    #[test]
    fn exact_division_and_gcd() {
        let x = P::var(Var::X);
        let a = &c(1) - &x.pow(2);
        let b = &c(1) - &x;
        assert_eq!(a.div_exact(&b), Some(&c(1) + &x));
        assert_eq!(b.div_exact(&a), None);
        let g = a.gcd(&b);
        assert_eq!(g, (&x - &c(1)).monic());
        // bivariate: (1 - xq)(1 + q) and (1 - xq)(2 - x)
        let f = &c(1) - &(&x * &q());
        let u = &f * &(&c(1) + &q());
        let w = &f * &(&c(2) - &x);
        assert_eq!(u.gcd(&w), f.monic());
        assert!(u.gcd(&(&c(1) + &x)).is_one());
    }

    #[test]
    fn substitution() {
        let x = P::var(Var::X);
        let p = &c(1) - &x.pow(3);
        let s = p.substitute(Var::X, &(-t()));
        assert_eq!(s, &c(1) + &t().pow(3));
    }
}
