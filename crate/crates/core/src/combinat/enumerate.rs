//! Exhaustive enumerators in canonical (lexicographic) order.

use super::composition::{compositions, Composition};
use super::quasi_ribbon::QuasiRibbon;
use super::tree::BinaryTree;
use super::word::{self, Letter};
use super::words::{Ndpf, PackedWord, ParkingFunction, Permutation};
use crate::error::{Error, Result};
use itertools::Itertools;
use std::fmt;
use std::str::FromStr;

/// Largest size accepted by [`enumerate`].
pub const MAX_ENUM_N: usize = 12;

pub fn ndpfs(n: usize) -> Vec<Ndpf> {
    fn go(n: usize, prefix: &mut Vec<Letter>, out: &mut Vec<Ndpf>) {
        let i = prefix.len();
        if i == n {
            out.push(Ndpf::new_unchecked(prefix.clone()));
            return;
        }
        let lo = prefix.last().copied().unwrap_or(1);
        for a in lo..=(i as Letter + 1) {
            prefix.push(a);
            go(n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

pub fn parking_functions(n: usize) -> Vec<ParkingFunction> {
    let mut out: Vec<ParkingFunction> = ndpfs(n)
        .iter()
        .flat_map(|p| word::distinct_rearrangements(p.letters()))
        .map(ParkingFunction::new_unchecked)
        .collect();
    out.sort_unstable();
    out
}

pub fn permutations(n: usize) -> Vec<Permutation> {
    word::distinct_rearrangements(&(1..=n as Letter).collect::<Vec<_>>())
        .into_iter()
        .map(Permutation::new_unchecked)
        .collect()
}

pub fn packed_words(n: usize) -> Vec<PackedWord> {
    fn go(n: usize, prefix: &mut Vec<Letter>, seen: &mut Vec<bool>, out: &mut Vec<PackedWord>) {
        let max = prefix.iter().copied().max().unwrap_or(0) as usize;
        let missing = (1..=max).filter(|&a| !seen[a]).count();
        if missing > n - prefix.len() {
            return;
        }
        if prefix.len() == n {
            out.push(PackedWord::new_unchecked(prefix.clone()));
            return;
        }
        for a in 1..=n {
            let was = seen[a];
            seen[a] = true;
            prefix.push(a as Letter);
            go(n, prefix, seen, out);
            prefix.pop();
            seen[a] = was;
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
    out
}

pub fn quasi_ribbons(n: usize) -> Vec<QuasiRibbon> {
    let mut out = Vec::new();
    for p in ndpfs(n) {
        let ascents: Vec<usize> = (1..n).filter(|&i| p.letters()[i - 1] < p.letters()[i]).collect();
        let mut level: Vec<QuasiRibbon> = ascents
            .into_iter()
            .powerset()
            .map(|bars| QuasiRibbon::new(p.clone(), bars).expect("bars at strict ascents"))
            .collect();
        level.sort();
        out.extend(level);
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    Parking,
    Ndpf,
    Packed,
    Permutation,
    QuasiRibbon,
    Composition,
    BinaryTree,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Parking,
        Family::Ndpf,
        Family::Packed,
        Family::Permutation,
        Family::QuasiRibbon,
        Family::Composition,
        Family::BinaryTree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Parking => "parking",
            Family::Ndpf => "ndpf",
            Family::Packed => "packed",
            Family::Permutation => "permutation",
            Family::QuasiRibbon => "quasi_ribbon",
            Family::Composition => "composition",
            Family::BinaryTree => "binary_tree",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse { input: s.to_string(), what: "family" })
    }
}

/// Text encodings of every object of the family of size `n`, in canonical order.
pub fn enumerate(family: Family, n: usize) -> Result<Vec<String>> {
    if n > MAX_ENUM_N {
        return Err(Error::OutOfRange { what: "enumeration size", value: n, max: MAX_ENUM_N });
    }
    fn strings<T: ToString>(v: Vec<T>) -> Vec<String> {
        v.iter().map(T::to_string).collect()
    }
    Ok(match family {
        Family::Parking => strings(parking_functions(n)),
        Family::Ndpf => strings(ndpfs(n)),
        Family::Packed => strings(packed_words(n)),
        Family::Permutation => strings(permutations(n)),
        Family::QuasiRibbon => strings(quasi_ribbons(n)),
        Family::Composition => strings::<Composition>(compositions(n as u32)),
        Family::BinaryTree => strings(BinaryTree::all(n)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{binomial, catalan};
    use std::collections::BTreeSet;

    // Large Schröder r_n = Σ_k C(n+k, n−k) c_k; little s_n = r_n / 2 for n ≥ 1.
    fn little_schroder(n: usize) -> usize {
        if n == 0 {
            return 1;
        }
        let r: u64 = (0..=n as u64).map(|k| binomial(n as u64 + k, n as u64 - k) * catalan(k)).sum();
        (r / 2) as usize
    }

    fn ordered_bell(n: usize) -> usize {
        let mut a = vec![1usize];
        for m in 1..=n {
            a.push((1..=m).map(|k| binomial(m as u64, k as u64) as usize * a[m - k]).sum());
        }
        a[n]
    }

    fn check_canonical(v: &[String]) {
        let set: BTreeSet<&String> = v.iter().collect();
        assert_eq!(set.len(), v.len(), "duplicates");
    }

    #[test]
    fn family_sizes() {
        for n in 0..=8 {
            assert_eq!(ndpfs(n).len() as u64, catalan(n as u64));
            assert_eq!(quasi_ribbons(n).len(), little_schroder(n), "n={n}");
            assert_eq!(packed_words(n).len(), ordered_bell(n), "n={n}");
        }
        for n in 0..=7 {
            assert_eq!(parking_functions(n).len(), (n + 1).pow(n.saturating_sub(1) as u32));
        }
        assert_eq!(quasi_ribbons(3).len(), 11);
    }

    #[test]
    fn lexicographic_and_duplicate_free() {
        for f in Family::ALL {
            for n in 0..=5 {
                check_canonical(&enumerate(f, n).unwrap());
            }
        }
        let pf: Vec<Vec<Letter>> = parking_functions(4).into_iter().map(|p| p.into_letters()).collect();
        assert!(pf.windows(2).all(|p| p[0] < p[1]));
        let pw: Vec<Vec<Letter>> = packed_words(4).into_iter().map(|p| p.into_letters()).collect();
        assert!(pw.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(enumerate(Family::Ndpf, 3).unwrap(), ["111", "112", "113", "122", "123"]);
    }

    #[test]
    fn exhaustive_oracles() {
        // Brute force over all words in {1..n}^n.
        for n in 1..=5usize {
            let words: Vec<Vec<Letter>> = (0..n)
                .map(|_| 1..=n as Letter)
                .multi_cartesian_product()
                .collect();
            let pf: Vec<_> = words.iter().filter(|w| word::is_parking(w)).cloned().collect();
            let ours: Vec<_> = parking_functions(n).into_iter().map(|p| p.into_letters()).collect();
            assert_eq!(ours, pf);
            let pw: Vec<_> = words.iter().filter(|w| word::pack(w) == **w).cloned().collect();
            let ours: Vec<_> = packed_words(n).into_iter().map(|p| p.into_letters()).collect();
            assert_eq!(ours, pw);
        }
    }

    #[test]
    fn hypoplactic_classes_partition_parking_functions() {
        use super::super::quasi_ribbon::hypoplactic_quasi_ribbon;
        for n in 0..=6 {
            let classes: BTreeSet<QuasiRibbon> = parking_functions(n)
                .iter()
                .map(|a| hypoplactic_quasi_ribbon(a).expect("bar invariant"))
                .collect();
            let all: BTreeSet<QuasiRibbon> = quasi_ribbons(n).into_iter().collect();
            assert_eq!(classes, all, "n={n}");
            let total: usize = all.iter().map(|q| q.class_members().len()).sum();
            assert_eq!(total, parking_functions(n).len());
        }
    }

    #[test]
    fn size_limit() {
        assert!(enumerate(Family::Composition, MAX_ENUM_N + 1).is_err());
        assert_eq!("quasi_ribbon".parse::<Family>().unwrap(), Family::QuasiRibbon);
    }
}
