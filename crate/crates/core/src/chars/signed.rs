//! Signed parking functions and their statistics.

use crate::combinat::word::{is_parking, standardize};
use crate::combinat::{parking_functions, Letter, ParkingFunction};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// A parking function with a sign on each letter; `signs[i]` is `true` for `−`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SignedParkingFunction {
    base: ParkingFunction,
    minus: Vec<bool>,
}

impl SignedParkingFunction {
    pub fn new(base: ParkingFunction, minus: Vec<bool>) -> Result<Self> {
        if base.len() != minus.len() {
            return Err(Error::InvalidWord { word: base.into_letters(), reason: "sign vector has the wrong length" });
        }
        Ok(SignedParkingFunction { base, minus })
    }

    /// From signed values `ε_i a_i`.
    pub fn from_values(values: &[i64]) -> Result<Self> {
        let letters: Vec<Letter> = values.iter().map(|v| v.unsigned_abs() as Letter).collect();
        let minus = values.iter().map(|&v| v < 0).collect();
        SignedParkingFunction::new(ParkingFunction::new(letters)?, minus)
    }

    pub fn base(&self) -> &ParkingFunction {
        &self.base
    }

    pub fn minus(&self) -> &[bool] {
        &self.minus
    }

    pub fn len(&self) -> usize {
        self.minus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minus.is_empty()
    }

    /// `v_i = ε_i a_i`.
    pub fn values(&self) -> Vec<i64> {
        self.base.letters().iter().zip(&self.minus).map(|(&a, &m)| if m { -(a as i64) } else { a as i64 }).collect()
    }

    pub fn minus_count(&self) -> usize {
        self.minus.iter().filter(|&&m| m).count()
    }

    pub fn stats(&self) -> SignedStats {
        signed_stats(self)
    }

    /// Letters reordered by signed value.
    pub fn sorted(&self) -> SignedParkingFunction {
        let mut v = self.values();
        v.sort_unstable();
        SignedParkingFunction::from_values(&v).expect("rearrangements of parking functions park")
    }
}

impl fmt::Display for SignedParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values().iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for SignedParkingFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { input: s.to_string(), what: "signed parking function" };
        let s = s.trim();
        if s.is_empty() {
            return SignedParkingFunction::from_values(&[]);
        }
        let values = if s.contains(',') {
            s.split(',').map(|p| p.trim().parse::<i64>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?
        } else {
            // Compact form "11-12-4": a '-' applies to the next digit.
            let mut out = Vec::new();
            let mut neg = false;
            for ch in s.chars() {
                match ch {
                    '-' if !neg => neg = true,
                    d if d.is_ascii_digit() => {
                        let v = d.to_digit(10).ok_or_else(bad)? as i64;
                        out.push(if neg { -v } else { v });
                        neg = false;
                    }
                    _ => return Err(bad()),
                }
            }
            if neg {
                return Err(bad());
            }
            out
        };
        if values.contains(&0) {
            return Err(bad());
        }
        SignedParkingFunction::from_values(&values)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedStats {
    pub minus_count: usize,
    pub sinv: usize,
    /// Signed descents, 1-based.
    pub sdes: Vec<usize>,
    pub smaj: usize,
}

/// `(i, j)` is a signed inversion when `v_i > v_j`, or `v_i = v_j` with both signs negative.
fn signed_greater(vi: i64, vj: i64) -> bool {
    vi > vj || (vi == vj && vi < 0)
}

pub fn signed_stats(s: &SignedParkingFunction) -> SignedStats {
    let v = s.values();
    let n = v.len();
    let mut sinv = 0;
    for i in 0..n {
        for j in i + 1..n {
            sinv += usize::from(signed_greater(v[i], v[j]));
        }
    }
    let sdes: Vec<usize> = (1..n).filter(|&i| signed_greater(v[i - 1], v[i])).collect();
    SignedStats { minus_count: s.minus_count(), sinv, smaj: sdes.iter().sum(), sdes }
}

/// `maj` of a signed permutation in the order of `ℤ`.
pub fn signed_maj(sigma: &[Letter], minus: &[bool]) -> usize {
    let v: Vec<i64> = sigma.iter().zip(minus).map(|(&a, &m)| if m { -(a as i64) } else { a as i64 }).collect();
    (1..v.len()).filter(|&i| v[i - 1] > v[i]).sum()
}

/// Signed descents of `(a, ε)` are the descents of `(std(a), ε)`.
pub fn standardized(s: &SignedParkingFunction) -> (Vec<Letter>, Vec<bool>) {
    (standardize(s.base.letters()), s.minus.clone())
}

/// All `2ⁿ` sign vectors, in binary order.
pub fn sign_vectors(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u32..1 << n).map(move |mask| (0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect())
}

pub fn signed_parking_functions(n: usize) -> Vec<SignedParkingFunction> {
    let mut out = Vec::new();
    for a in parking_functions(n) {
        for minus in sign_vectors(n) {
            out.push(SignedParkingFunction { base: a.clone(), minus });
        }
    }
    out
}

/// Shifted shuffle of signed words: letters of `b` shift by `|a|`, signs travel.
pub fn signed_shifted_shuffle(a: &SignedParkingFunction, b: &SignedParkingFunction) -> Vec<SignedParkingFunction> {
    let (n, m) = (a.len(), b.len());
    let va = a.values();
    let vb: Vec<i64> = b.values().iter().map(|&v| if v < 0 { v - n as i64 } else { v + n as i64 }).collect();
    let mut out = Vec::new();
    for positions in itertools::Itertools::combinations(0..n + m, n) {
        let mut word = Vec::with_capacity(n + m);
        let (mut i, mut j) = (0, 0);
        for p in 0..n + m {
            if i < n && positions[i] == p {
                word.push(va[i]);
                i += 1;
            } else {
                word.push(vb[j]);
                j += 1;
            }
        }
        out.push(SignedParkingFunction::from_values(&word).expect("shifted shuffles of parking functions park"));
    }
    out
}

/// Whether the absolute values form a parking function.
pub fn is_signed_parking(values: &[i64]) -> bool {
    let letters: Vec<Letter> = values.iter().map(|v| v.unsigned_abs() as Letter).collect();
    !values.contains(&0) && is_parking(&letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> SignedParkingFunction {
        x.parse().unwrap()
    }

    #[test]
    fn statistics() {
        let st = s("-1,-1").stats();
        assert_eq!((st.minus_count, st.sinv), (2, 1));
        assert_eq!(s("21").stats().sinv, 1);
        let st = s("12").stats();
        assert_eq!((st.sinv, st.smaj), (0, 0));
        assert_eq!(s("-4,-1,1,1,2").stats().sinv, 0);
        assert_eq!(s("11-12-4").to_string(), "1,1,-1,2,-4");
    }

    #[test]
    fn counts() {
        for n in 0..=5usize {
            let expected = (1usize << n) * (n + 1).pow(n.saturating_sub(1) as u32);
            assert_eq!(signed_parking_functions(n).len(), expected);
        }
    }

    #[test]
    fn statistics_through_standardization() {
        for w in signed_parking_functions(4) {
            let (sigma, minus) = standardized(&w);
            assert_eq!(w.stats().smaj, signed_maj(&sigma, &minus));
        }
    }

    #[test]
    fn rejects_malformed() {
        assert!("0,1".parse::<SignedParkingFunction>().is_err());
        assert!("-".parse::<SignedParkingFunction>().is_err());
        assert!("33".parse::<SignedParkingFunction>().is_err());
        assert!(is_signed_parking(&[-1, 2]));
    }

    #[test]
    fn shuffle_size() {
        let w = signed_shifted_shuffle(&s("-1"), &s("1,-1"));
        assert_eq!(w.len(), 3);
        assert!(w.contains(&s("-1,2,-2")));
        assert!(w.contains(&s("2,-2,-1")));
    }
}
