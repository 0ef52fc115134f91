//! Noncommutative symmetric functions in the complete (`S`) and ribbon (`R`) bases.

mod alphabet;

pub use alphabet::{cycle_enumerator, rising_factorial, VirtualAlphabet};

use crate::combinat::{compositions, Composition};
use crate::error::{Error, Result};
use crate::exact::{LinComb, Ring};
use std::fmt;
use std::ops::{Add, Neg, Sub};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SymBasis {
    S,
    R,
}

impl SymBasis {
    pub fn name(self) -> &'static str {
        match self {
            SymBasis::S => "S",
            SymBasis::R => "R",
        }
    }
}

/// An element of `Sym` expanded in one of the two bases.
#[derive(Clone, PartialEq, Debug)]
pub struct SymElem<C> {
    basis: SymBasis,
    terms: LinComb<Composition, C>,
}

impl<C: Ring> SymElem<C> {
    pub fn from_terms(basis: SymBasis, terms: LinComb<Composition, C>) -> Self {
        SymElem { basis, terms }
    }

    pub fn zero(basis: SymBasis) -> Self {
        SymElem::from_terms(basis, LinComb::zero())
    }

    pub fn one(basis: SymBasis) -> Self {
        SymElem::from_terms(basis, LinComb::basis(Composition::empty()))
    }

    /// `S^I`.
    pub fn s(i: Composition) -> Self {
        SymElem::from_terms(SymBasis::S, LinComb::basis(i))
    }

    /// `R_I`; zero parts are rejected.
    pub fn r(i: Composition) -> Result<Self> {
        if i.is_extended() {
            return Err(Error::ExtendedKey);
        }
        Ok(SymElem::from_terms(SymBasis::R, LinComb::basis(i)))
    }

    /// `S_n`, with `S_0` a separate generator in the extended algebra.
    pub fn s_n(n: u32) -> Self {
        SymElem::s(Composition::extended(vec![n]))
    }

    pub fn basis(&self) -> SymBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<Composition, C> {
        &self.terms
    }

    pub fn into_terms(self) -> LinComb<Composition, C> {
        self.terms
    }

    pub fn coeff(&self, i: &Composition) -> C {
        self.terms.coeff(i)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn scale(&self, c: &C) -> Self {
        SymElem::from_terms(self.basis, self.terms.scale(c))
    }

    /// Component of weight `n` (sum of parts).
    pub fn graded_part(&self, n: u32) -> Self {
        SymElem::from_terms(self.basis, self.terms.filter(|i| i.size() == n))
    }

    fn expect_basis(&self, basis: SymBasis) -> Result<()> {
        if self.basis == basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch { expected: basis.name(), found: self.basis.name() })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        other.expect_basis(self.basis)?;
        Ok(SymElem::from_terms(self.basis, &self.terms + &other.terms))
    }

    /// Free product in the `S` basis: `S^I S^J = S^{I·J}`.
    pub fn s_product(&self, other: &Self) -> Result<Self> {
        self.expect_basis(SymBasis::S)?;
        other.expect_basis(SymBasis::S)?;
        let terms = self.terms.bilinear(&other.terms, |i, j| LinComb::basis(i.concat(j)));
        Ok(SymElem::from_terms(SymBasis::S, terms))
    }

    /// `R_I R_J = R_{I·J} + R_{I▷J}`.
    pub fn ribbon_product(&self, other: &Self) -> Result<Self> {
        self.expect_basis(SymBasis::R)?;
        other.expect_basis(SymBasis::R)?;
        let terms = self.terms.bilinear(&other.terms, |i, j| {
            let mut out = LinComb::basis(i.concat(j));
            if let Ok(k) = i.near_concat(j) {
                out.add_term(k, C::one());
            }
            out
        });
        Ok(SymElem::from_terms(SymBasis::R, terms))
    }

    /// Product in whichever basis both operands share.
    pub fn product(&self, other: &Self) -> Result<Self> {
        match self.basis {
            SymBasis::S => self.s_product(other),
            SymBasis::R => self.ribbon_product(other),
        }
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        (0..k).try_fold(SymElem::one(self.basis), |acc, _| acc.product(self))
    }

    /// `S^I = Σ_{J ≤ I} R_J`.
    pub fn to_r(&self) -> Result<Self> {
        if self.basis == SymBasis::R {
            return Ok(self.clone());
        }
        let terms = self.terms.try_linear(|i| {
            if i.is_extended() {
                return Err(Error::ExtendedKey);
            }
            Ok(i.coarsenings().into_iter().map(|j| (j, C::one())).collect())
        })?;
        Ok(SymElem::from_terms(SymBasis::R, terms))
    }

    /// `R_I = Σ_{J ≤ I} (−1)^{ℓ(I)−ℓ(J)} S^J`.
    pub fn to_s(&self) -> Result<Self> {
        if self.basis == SymBasis::S {
            return Ok(self.clone());
        }
        let terms = self.terms.linear(|i| {
            i.coarsenings()
                .into_iter()
                .map(|j| {
                    let sign = if (i.len() - j.len()) % 2 == 0 { C::one() } else { -C::one() };
                    (j, sign)
                })
                .collect()
        });
        Ok(SymElem::from_terms(SymBasis::S, terms))
    }

    pub fn to_basis(&self, basis: SymBasis) -> Result<Self> {
        match basis {
            SymBasis::S => self.to_s(),
            SymBasis::R => self.to_r(),
        }
    }

    /// Keys mapped by `I ↦ I~`.
    pub fn conjugate_keys(&self) -> Result<Self> {
        let terms = self.terms.try_linear(|i| Ok::<_, Error>(LinComb::basis(i.conjugate()?)))?;
        Ok(SymElem::from_terms(self.basis, terms))
    }

    /// `S₀ ↦ 1`: zero parts are dropped from every key.
    pub fn forget_zeros(&self) -> Self {
        let terms = self.terms.linear(|i| {
            LinComb::basis(Composition::extended(i.parts().iter().copied().filter(|&p| p > 0).collect()))
        });
        SymElem::from_terms(self.basis, terms)
    }
}

impl<C: Ring> Add for &SymElem<C> {
    type Output = SymElem<C>;
    /// # Panics
    /// On operands in different bases; use [`SymElem::try_add`] to recover.
    fn add(self, rhs: Self) -> SymElem<C> {
        self.try_add(rhs).expect("sum of elements in different bases")
    }
}

impl<C: Ring> Sub for &SymElem<C> {
    type Output = SymElem<C>;
    fn sub(self, rhs: Self) -> SymElem<C> {
        self + &(-rhs.clone())
    }
}

impl<C: Ring> Neg for SymElem<C> {
    type Output = SymElem<C>;
    fn neg(self) -> SymElem<C> {
        SymElem::from_terms(self.basis, -self.terms)
    }
}

impl<C: Ring> fmt::Display for SymElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return f.write_str("0");
        }
        let b = self.basis.name();
        for (n, (i, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = if is_negative_unit(c) { (true, C::one()) } else { (false, c.clone()) };
            if n > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            if !abs.is_one() {
                let s = abs.to_string();
                if s.contains(['+', ' ', '/']) || (n > 0 && s.starts_with('-')) {
                    write!(f, "({s})")?;
                } else {
                    f.write_str(&s)?;
                }
            }
            if i.is_empty() {
                write!(f, "1")?;
            } else {
                write!(f, "{b}^{i}")?;
            }
        }
        Ok(())
    }
}

fn is_negative_unit<C: Ring>(c: &C) -> bool {
    (-c.clone()).is_one()
}

/// The formal series `σ_t = Σ_n S_n tⁿ`, truncated: entry `n` is `S_n`.
pub fn sigma_t<C: Ring>(order: u32) -> Vec<SymElem<C>> {
    (0..=order)
        .map(|n| if n == 0 { SymElem::one(SymBasis::S) } else { SymElem::s_n(n) })
        .collect()
}

/// The two composition products `·` and `▷` are associative and mutually
/// associative on every triple of nonempty compositions of total size `n`,
/// and the ribbon product is associative on the lifted triples.
pub fn as2_axioms_check(n: u32) -> bool {
    type Op = fn(&Composition, &Composition) -> Composition;
    let ops: [Op; 2] = [|a, b| a.concat(b), |a, b| a.near_concat(b).expect("nonempty")];
    for a in 1..=n {
        for b in 1..=n.saturating_sub(a) {
            let c = n - a - b;
            if c == 0 {
                continue;
            }
            for i in compositions(a) {
                for j in compositions(b) {
                    for k in compositions(c) {
                        for op1 in ops {
                            for op2 in ops {
                                if op2(&op1(&i, &j), &k) != op1(&i, &op2(&j, &k)) {
                                    return false;
                                }
                            }
                        }
                        let r = |x: &Composition| SymElem::<i64>::r(x.clone()).expect("plain");
                        let left = r(&i).ribbon_product(&r(&j)).and_then(|x| x.ribbon_product(&r(&k)));
                        let right = r(&j).ribbon_product(&r(&k)).and_then(|x| r(&i).ribbon_product(&x));
                        if left.ok() != right.ok() {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn s(k: &str) -> SymElem<i64> {
        SymElem::s(c(k))
    }

    fn r(k: &str) -> SymElem<i64> {
        SymElem::r(c(k)).unwrap()
    }

    fn sum(xs: &[SymElem<i64>]) -> SymElem<i64> {
        xs.iter().skip(1).fold(xs[0].clone(), |a, b| &a + b)
    }

    #[test]
    fn s_products_concatenate() {
        assert_eq!(s("2").s_product(&s("11")).unwrap(), s("211"));
        assert_eq!(SymElem::one(SymBasis::S).s_product(&s("21")).unwrap(), s("21"));
        assert_eq!(s("1").s_product(&s("0")).unwrap(), s("10"));
        assert!(s("1").s_product(&r("1")).is_err());
    }

    #[test]
    fn ribbon_expansions() {
        // S^I sums ribbons over coarser compositions.
        assert_eq!(s("2").to_r().unwrap(), r("2"));
        assert_eq!(s("11").to_r().unwrap(), sum(&[r("11"), r("2")]));
        assert_eq!(r("11").to_s().unwrap(), &s("11") - &s("2"));
        assert_eq!(r("1").ribbon_product(&r("1")).unwrap(), sum(&[r("11"), r("2")]));
        assert!(s("10").to_r().is_err());
    }

    #[test]
    fn bases_are_inverse_and_products_agree() {
        for n in 0..=6 {
            for i in compositions(n) {
                assert_eq!(s(&i.to_string()).to_r().unwrap().to_s().unwrap(), SymElem::s(i.clone()));
                let ri = SymElem::<i64>::r(i.clone()).unwrap();
                assert_eq!(ri.to_s().unwrap().to_r().unwrap(), ri);
            }
        }
        for a in 1..=4 {
            for b in 1..=(6 - a) {
                for i in compositions(a) {
                    for j in compositions(b) {
                        let ri = SymElem::<i64>::r(i.clone()).unwrap();
                        let rj = SymElem::<i64>::r(j.clone()).unwrap();
                        let via_r = ri.ribbon_product(&rj).unwrap().to_s().unwrap();
                        let via_s = ri.to_s().unwrap().s_product(&rj.to_s().unwrap()).unwrap();
                        assert_eq!(via_r, via_s, "{i} {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn as2_structure() {
        assert!(as2_axioms_check(0));
        for n in 1..=6 {
            assert!(as2_axioms_check(n), "n={n}");
        }
        let one = c("1");
        assert_eq!(one.concat(&one).near_concat(&one).unwrap(), c("12"));
        assert_eq!(one.concat(&one.near_concat(&one).unwrap()), c("12"));
    }

    #[test]
    fn display() {
        let x = &s("21").scale(&3) - &s("3");
        assert_eq!(x.to_string(), "3S^21 - S^3");
        assert_eq!(SymElem::<i64>::one(SymBasis::R).to_string(), "1");
    }

    #[test]
    fn conjugation() {
        assert_eq!(s("31").conjugate_keys().unwrap(), s("211"));
        assert_eq!(s("1110").forget_zeros(), s("111"));
    }

    fn composition() -> impl Strategy<Value = Composition> {
        proptest::collection::vec(1u32..=3, 0..=3).prop_map(|p| Composition::new(p).unwrap())
    }

    proptest! {
        #[test]
        fn ribbon_product_is_associative(i in composition(), j in composition(), k in composition()) {
            let (ri, rj, rk) = (
                SymElem::<i64>::r(i).unwrap(),
                SymElem::<i64>::r(j).unwrap(),
                SymElem::<i64>::r(k).unwrap(),
            );
            let left = ri.ribbon_product(&rj).unwrap().ribbon_product(&rk).unwrap();
            let right = ri.ribbon_product(&rj.ribbon_product(&rk).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
