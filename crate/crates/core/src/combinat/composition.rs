use crate::error::{Error, Result};
use crate::exact::Graded;
use itertools::Itertools;
use std::fmt;
use std::str::FromStr;

/// A composition `(i₁, …, i_r)`. Extended compositions may contain zero parts;
/// they index the words `S^{ev(π)·0}` of the `S₀`-extended algebra.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Composition {
    parts: Vec<u32>,
    extended: bool,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(p) = parts.iter().position(|&i| i == 0) {
            return Err(Error::InvariantViolation(format!(
                "zero part at index {p} of a non-extended composition"
            )));
        }
        Ok(Composition { parts, extended: false })
    }

    /// Admits zero parts.
    pub fn extended(parts: Vec<u32>) -> Self {
        let extended = parts.contains(&0);
        Composition { parts, extended }
    }

    pub fn empty() -> Self {
        Composition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts `ℓ(I)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_extended(&self) -> bool {
        self.extended
    }

    fn require_plain(&self) -> Result<()> {
        if self.extended {
            Err(Error::ExtendedKey)
        } else {
            Ok(())
        }
    }

    /// `I · J`.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition::extended(parts)
    }

    /// `I ▷ J`: concatenation with the last part of `I` fused to the first of `J`.
    pub fn near_concat(&self, other: &Composition) -> Result<Composition> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptyLeftOperand { op: "near_concat" });
        }
        let mut parts = self.parts.clone();
        *parts.last_mut().expect("nonempty") += other.parts[0];
        parts.extend_from_slice(&other.parts[1..]);
        Ok(Composition::extended(parts))
    }

    /// Partial sums `i₁, i₁+i₂, …` excluding the total.
    pub fn descent_set(&self) -> Vec<u32> {
        let mut acc = 0;
        let mut out: Vec<u32> = self
            .parts
            .iter()
            .map(|&i| {
                acc += i;
                acc
            })
            .collect();
        out.pop();
        out
    }

    pub fn from_descent_set(n: u32, descents: &[u32]) -> Result<Composition> {
        let mut cuts = vec![0];
        cuts.extend(descents.iter().copied().sorted().dedup());
        if n > 0 {
            cuts.push(n);
        }
        if cuts.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::InvariantViolation(format!(
                "descent set {descents:?} does not fit in 1..{n}"
            )));
        }
        Composition::new(cuts.windows(2).map(|p| p[1] - p[0]).collect())
    }

    /// Ribbon conjugate: complement the descent set, then mirror it.
    pub fn conjugate(&self) -> Result<Composition> {
        self.require_plain()?;
        let n = self.size();
        if n == 0 {
            return Ok(Composition::empty());
        }
        let d = self.descent_set();
        let comp: Vec<u32> = (1..n).filter(|i| !d.contains(i)).map(|i| n - i).collect();
        Composition::from_descent_set(n, &comp)
    }

    /// `I ≤ J`: the parts of `I` are sums of consecutive parts of `J`.
    pub fn coarser_leq(&self, other: &Composition) -> bool {
        if self.size() != other.size() || self.extended || other.extended {
            return false;
        }
        let theirs = other.descent_set();
        self.descent_set().iter().all(|d| theirs.contains(d))
    }

    /// All `J` with `J ≤ self`, in lexicographic order of parts.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let n = self.size();
        let d = self.descent_set();
        let mut out: Vec<Composition> = d
            .iter()
            .copied()
            .powerset()
            .map(|sub| Composition::from_descent_set(n, &sub).expect("subset of a descent set"))
            .collect();
        out.sort();
        out
    }

    /// All `J` with `self ≤ J`.
    pub fn refinements(&self) -> Vec<Composition> {
        compositions(self.size()).into_iter().filter(|j| self.coarser_leq(j)).collect()
    }
}

/// All compositions of `n` in lexicographic order of their parts.
pub fn compositions(n: u32) -> Vec<Composition> {
    fn go(n: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition { parts: prefix.clone(), extended: false });
            return;
        }
        for first in 1..=n {
            prefix.push(first);
            go(n - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// Graded order: by size, then by parts lexicographically.
impl Ord for Composition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.size(), &self.parts).cmp(&(other.size(), &other.parts))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Graded for Composition {
    fn degree(&self) -> usize {
        self.size() as usize
    }
}

/// Digit string (`211`, `1110`) when all parts are below 10, comma separated
/// otherwise; the empty composition prints as `()`.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            f.write_str("()")
        } else if self.parts.iter().all(|&i| i < 10) {
            f.write_str(&self.parts.iter().join(""))
        } else {
            f.write_str(&self.parts.iter().join(","))
        }
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        let err = || Error::Parse { input: s.to_string(), what: "composition" };
        let parts: Vec<u32> = if t.is_empty() {
            Vec::new()
        } else if t.contains(',') {
            t.split(',').map(|p| p.trim().parse().map_err(|_| err())).collect::<Result<_>>()?
        } else {
            t.chars().map(|c| c.to_digit(10).ok_or_else(err)).collect::<Result<_>>()?
        };
        Ok(Composition::extended(parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn concatenations() {
        assert_eq!(c("2").concat(&c("11")), c("211"));
        assert_eq!(c("2").near_concat(&c("11")).unwrap(), c("31"));
        assert!(c("()").near_concat(&c("1")).is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(c("1111").conjugate().unwrap(), c("4"));
        assert_eq!(c("31").conjugate().unwrap(), c("211"));
        assert_eq!(c("22").conjugate().unwrap(), c("121"));
        for n in 0..=7 {
            for i in compositions(n) {
                let j = i.conjugate().unwrap();
                assert_eq!(j.conjugate().unwrap(), i);
                assert_eq!(i.len() + j.len(), n as usize + 1 - (n == 0) as usize);
            }
        }
    }

    #[test]
    fn reverse_refinement_by_consecutive_sums() {
        // Oracle: greedily match each part of I against consecutive parts of J.
        fn sums_match(i: &[u32], j: &[u32]) -> bool {
            let mut k = 0;
            for &p in i {
                let mut acc = 0;
                while acc < p && k < j.len() {
                    acc += j[k];
                    k += 1;
                }
                if acc != p {
                    return false;
                }
            }
            k == j.len()
        }
        for n in 0..=6 {
            for i in compositions(n) {
                for j in compositions(n) {
                    assert_eq!(i.coarser_leq(&j), sums_match(i.parts(), j.parts()), "{i} {j}");
                }
            }
        }
        assert!(c("21").coarser_leq(&c("111")));
        assert!(!c("111").coarser_leq(&c("21")));
        assert_eq!(c("11").coarsenings(), vec![c("11"), c("2")]);
    }

    #[test]
    fn counts_and_order() {
        for n in 1..=8 {
            assert_eq!(compositions(n).len(), 1 << (n - 1));
        }
        let names: Vec<String> = compositions(3).iter().map(|i| i.to_string()).collect();
        assert_eq!(names, ["111", "12", "21", "3"]);
    }

    #[test]
    fn extended_keys() {
        let k = c("1110");
        assert!(k.is_extended());
        assert_eq!(k.size(), 3);
        assert!(k.conjugate().is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
        assert_eq!(c("(2,1)"), c("21"));
        assert_eq!(Composition::new(vec![12, 1]).unwrap().to_string(), "12,1");
    }
}
