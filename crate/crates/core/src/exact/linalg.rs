//! Exact Gaussian elimination on linear combinations.

use super::lincomb::{Graded, LinComb};
use super::scalar::Field;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Row echelon form keyed by pivot; each stored row has pivot coefficient 1
/// at its smallest key.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord, F> {
    rows: BTreeMap<K, LinComb<K, F>>,
}

impl<K: Ord + Clone, F: Field> Default for Echelon<K, F> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, F: Field> Echelon<K, F> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduces `v` against the current rows; returns the residue.
    pub fn reduce(&self, v: &LinComb<K, F>) -> LinComb<K, F> {
        let mut v = v.clone();
        let mut floor: Option<K> = None;
        loop {
            let next = v
                .iter()
                .find(|(k, _)| floor.as_ref().map_or(true, |f| *k > f) && self.rows.contains_key(*k))
                .map(|(k, c)| (k.clone(), c.clone()));
            match next {
                Some((k, c)) => {
                    v -= &self.rows[&k].scale(&c);
                    floor = Some(k);
                }
                None => return v,
            }
        }
    }

    /// Inserts `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &LinComb<K, F>) -> bool {
        let mut r = self.reduce(v);
        loop {
            let Some((k, c)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
                return false;
            };
            match self.rows.get(&k) {
                Some(row) => r -= &row.scale(&c),
                None => {
                    self.rows.insert(k, r.scale(&c.inv()));
                    return true;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &LinComb<K, F>) -> bool {
        self.reduce(v).is_zero()
    }
}

fn check_grading<'a, K: Graded + Ord + 'a>(
    keys: impl Iterator<Item = &'a K>,
) -> Result<()> {
    let mut degree = None;
    for k in keys {
        match degree {
            None => degree = Some(k.degree()),
            Some(d) if d != k.degree() => return Err(Error::MixedGrading),
            _ => {}
        }
    }
    Ok(())
}

/// Dimension of the span of homogeneous vectors of a common degree.
pub fn span_dimension<K: Ord + Clone + Graded, F: Field>(vectors: &[LinComb<K, F>]) -> Result<usize> {
    check_grading(vectors.iter().flat_map(|v| v.keys()))?;
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    Ok(e.rank())
}

/// Dimension of the kernel of the linear map given on a basis of one graded piece.
pub fn kernel_dimension<K, K2, F>(domain: &[K], map: impl Fn(&K) -> LinComb<K2, F>) -> Result<usize>
where
    K: Ord + Clone + Graded,
    K2: Ord + Clone + Graded,
    F: Field,
{
    check_grading(domain.iter())?;
    let images: Vec<_> = domain.iter().map(map).collect();
    Ok(domain.len() - span_dimension(&images)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::Ring;
    use crate::Rational;

    #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
    struct Key(usize, u8);
    impl Graded for Key {
        fn degree(&self) -> usize {
            self.0
        }
    }

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn multiples_span_a_line() {
        let v: LinComb<Key, Rational> = [(Key(1, 0), r(1)), (Key(1, 1), r(3))].into_iter().collect();
        assert_eq!(span_dimension(&[v.clone(), v.scale(&r(2))]).unwrap(), 1);
    }

    #[test]
    fn zero_map_kernel_is_everything() {
        let domain: Vec<Key> = (0..4).map(|i| Key(2, i)).collect();
        let dim = kernel_dimension(&domain, |_| LinComb::<Key, Rational>::zero()).unwrap();
        assert_eq!(dim, 4);
    }

    #[test]
    fn mixed_grading_rejected() {
        let a = LinComb::<Key, Rational>::basis(Key(1, 0));
        let b = LinComb::<Key, Rational>::basis(Key(2, 0));
        assert_eq!(span_dimension(&[a, b]), Err(Error::MixedGrading));
    }

    #[test]
    fn rank_is_invariant_under_scaling_and_order() {
        let vs: Vec<LinComb<Key, Rational>> = vec![
            [(Key(1, 0), r(1)), (Key(1, 1), r(1))].into_iter().collect(),
            [(Key(1, 1), r(1)), (Key(1, 2), r(1))].into_iter().collect(),
            [(Key(1, 0), r(1)), (Key(1, 2), r(-1))].into_iter().collect(),
        ];
        assert_eq!(span_dimension(&vs).unwrap(), 2);
        let mut shuffled: Vec<_> = vs.iter().rev().map(|v| v.scale(&r(-7))).collect();
        shuffled.swap(0, 1);
        assert_eq!(span_dimension(&shuffled).unwrap(), 2);
    }
}
