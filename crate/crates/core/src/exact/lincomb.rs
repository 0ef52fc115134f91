//! Finitely supported linear combinations of basis keys.

use super::scalar::Ring;
use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Keys carrying a degree, used to reject mixed gradings.
pub trait Graded {
    fn degree(&self) -> usize;
}

impl<A: Graded, B: Graded> Graded for (A, B) {
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree()
    }
}

/// A finite sum `Σ c_k · k` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord, C> {
    terms: BTreeMap<K, C>,
}

/// Tensor square of a free module, keyed by ordered pairs.
pub type Tensor<K, C> = LinComb<(K, K), C>;

impl<K: Ord, C> Default for LinComb<K, C> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, C: Ring> LinComb<K, C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, C::one())
    }

    pub fn term(key: K, coeff: C) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn add_term(&mut self, key: K, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn contains(&self, key: &K) -> bool {
        self.terms.contains_key(key)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, C> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, C> {
        self.terms.keys()
    }

    /// The single key of a one-term combination with coefficient one.
    pub fn as_single_key(&self) -> Option<&K> {
        match self.terms.iter().next() {
            Some((k, c)) if self.terms.len() == 1 && c.is_one() => Some(k),
            _ => None,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.iter()
            .map(|(k, v)| (k.clone(), v.clone() * c.clone()))
            .collect()
    }

    /// Keeps only the terms whose key satisfies `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&K) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<D: Ring>(&self, mut f: impl FnMut(&C) -> D) -> LinComb<K, D> {
        self.iter().map(|(k, c)| (k.clone(), f(c))).collect()
    }

    /// Linear extension of `f` defined on basis keys.
    pub fn linear<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2, C>) -> LinComb<K2, C> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            for (k2, c2) in f(k).terms {
                out.add_term(k2, c.clone() * c2);
            }
        }
        out
    }

    pub fn try_linear<K2: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<LinComb<K2, C>, E>,
    ) -> Result<LinComb<K2, C>, E> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            for (k2, c2) in f(k)?.terms {
                out.add_term(k2, c.clone() * c2);
            }
        }
        Ok(out)
    }

    /// Bilinear extension of `rule` defined on pairs of basis keys.
    pub fn bilinear<K2: Ord + Clone, K3: Ord + Clone>(
        &self,
        other: &LinComb<K2, C>,
        mut rule: impl FnMut(&K, &K2) -> LinComb<K3, C>,
    ) -> LinComb<K3, C> {
        let mut out = LinComb::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                let c = ca.clone() * cb.clone();
                for (k, ck) in rule(a, b).terms {
                    out.add_term(k, c.clone() * ck);
                }
            }
        }
        out
    }

    pub fn try_bilinear<K2: Ord + Clone, K3: Ord + Clone, E>(
        &self,
        other: &LinComb<K2, C>,
        mut rule: impl FnMut(&K, &K2) -> Result<LinComb<K3, C>, E>,
    ) -> Result<LinComb<K3, C>, E> {
        let mut out = LinComb::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                let c = ca.clone() * cb.clone();
                for (k, ck) in rule(a, b)?.terms {
                    out.add_term(k, c.clone() * ck);
                }
            }
        }
        Ok(out)
    }

    pub fn tensor<K2: Ord + Clone>(&self, other: &LinComb<K2, C>) -> LinComb<(K, K2), C> {
        self.bilinear(other, |a, b| LinComb::basis((a.clone(), b.clone())))
    }
}

impl<K: Ord + Clone + Graded, C: Ring> LinComb<K, C> {
    /// Homogeneous component of the given degree.
    pub fn graded_part(&self, degree: usize) -> Self {
        self.filter(|k| k.degree() == degree)
    }

    /// The common degree of all keys, `None` for zero or mixed elements.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.keys().map(Graded::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

impl<K: Ord + Clone, C: Ring> FromIterator<(K, C)> for LinComb<K, C> {
    fn from_iter<I: IntoIterator<Item = (K, C)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord, C> IntoIterator for LinComb<K, C> {
    type Item = (K, C);
    type IntoIter = btree_map::IntoIter<K, C>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<K: Ord + Clone, C: Ring> AddAssign<&LinComb<K, C>> for LinComb<K, C> {
    fn add_assign(&mut self, rhs: &LinComb<K, C>) {
        for (k, c) in rhs.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone, C: Ring> SubAssign<&LinComb<K, C>> for LinComb<K, C> {
    fn sub_assign(&mut self, rhs: &LinComb<K, C>) {
        for (k, c) in rhs.iter() {
            self.add_term(k.clone(), -c.clone());
        }
    }
}

impl<K: Ord + Clone, C: Ring> Add for &LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn add(self, rhs: Self) -> LinComb<K, C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone, C: Ring> Add for LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn add(mut self, rhs: Self) -> LinComb<K, C> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone, C: Ring> Sub for &LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn sub(self, rhs: Self) -> LinComb<K, C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone, C: Ring> Sub for LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn sub(mut self, rhs: Self) -> LinComb<K, C> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone, C: Ring> Neg for LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn neg(self) -> LinComb<K, C> {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<K: Ord + Clone, C: Ring> Mul<&C> for &LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn mul(self, rhs: &C) -> LinComb<K, C> {
        self.scale(rhs)
    }
}

impl<K: Ord + fmt::Display, C: fmt::Display + Ring> fmt::Display for LinComb<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "[{k}]")?;
            } else {
                write!(f, "({c})[{k}]")?;
            }
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Debug, C: fmt::Debug> fmt::Debug for LinComb<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
