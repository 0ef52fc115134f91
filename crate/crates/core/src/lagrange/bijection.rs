//! Binary trees and nondecreasing parking functions.

use crate::combinat::Letter;
use crate::combinat::{packed_evaluation, BinaryTree, Composition, Ndpf};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Root labelled `|L| + 1`, right subtree shifted by `|L|`, read in order:
/// `word(L) · (|L|+1) · word(R)[|L|]`, i.e. `B(L, R) = (L • 1) ∘ R`.
pub fn tree_to_ndpf(t: &BinaryTree) -> Ndpf {
    fn word(t: &BinaryTree, out: &mut Vec<Letter>, shift: Letter) {
        if let Some((l, r)) = t.children() {
            let m = l.size() as Letter;
            word(l, out, shift);
            out.push(shift + m + 1);
            word(r, out, shift + m);
        }
    }
    let mut out = Vec::with_capacity(t.size());
    word(t, &mut out, 0);
    Ndpf::new_unchecked(out)
}

/// The unique split `π = α • 1 ∘ β`.
pub fn decompose(pi: &Ndpf) -> Result<(Ndpf, Ndpf)> {
    let w = pi.letters();
    let mut found = None;
    for k in 0..w.len() {
        if w[k] as usize != k + 1 {
            continue;
        }
        let alpha = Ndpf::new(w[..k].to_vec());
        let beta = w[k + 1..].iter().map(|&a| a.checked_sub(k as Letter).filter(|&b| b >= 1)).collect::<Option<Vec<_>>>();
        if let (Ok(alpha), Some(beta)) = (alpha, beta) {
            if let Ok(beta) = Ndpf::new(beta) {
                if found.is_some() {
                    return Err(Error::InvariantViolation(format!("{pi} splits in two ways")));
                }
                found = Some((alpha, beta));
            }
        }
    }
    found.ok_or_else(|| Error::InvariantViolation(format!("{pi} has no split")))
}

pub fn ndpf_to_tree(pi: &Ndpf) -> Result<BinaryTree> {
    if pi.is_empty() {
        return Ok(BinaryTree::Leaf);
    }
    let (alpha, beta) = decompose(pi)?;
    Ok(BinaryTree::node(ndpf_to_tree(&alpha)?, ndpf_to_tree(&beta)?))
}

/// Mirror symmetry of trees transported to nondecreasing parking functions.
pub fn iota(pi: &Ndpf) -> Result<Ndpf> {
    Ok(tree_to_ndpf(&ndpf_to_tree(pi)?.mirror()))
}

/// Trees grouped by canopy and parking functions grouped by packed evaluation
/// give the same partition of the trees of size `n`.
pub fn canopy_evaluation_correspondence(n: usize) -> Result<bool> {
    let mut by_canopy: BTreeMap<_, Vec<BinaryTree>> = BTreeMap::new();
    let mut by_evaluation: BTreeMap<Composition, Vec<BinaryTree>> = BTreeMap::new();
    for t in BinaryTree::all(n) {
        let pi = tree_to_ndpf(&t);
        by_canopy.entry(t.canopy()).or_default().push(t.clone());
        by_evaluation.entry(Composition::new(packed_evaluation(pi.letters()))?).or_default().push(t);
    }
    let mut a: Vec<Vec<BinaryTree>> = by_canopy.into_values().collect();
    let mut b: Vec<Vec<BinaryTree>> = by_evaluation.into_values().collect();
    a.sort();
    b.sort();
    Ok(a == b)
}

/// Block sizes of the canopy partition, sorted.
pub fn canopy_block_sizes(n: usize) -> Vec<usize> {
    let mut by_canopy: BTreeMap<_, usize> = BTreeMap::new();
    for t in BinaryTree::all(n) {
        *by_canopy.entry(t.canopy()).or_default() += 1;
    }
    let mut sizes: Vec<usize> = by_canopy.into_values().collect();
    sizes.sort_unstable();
    sizes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::ndpfs;

    fn nd(s: &str) -> Ndpf {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let t: BinaryTree = "((.,(.,.)),((.,.),(.,(.,.))))".parse().unwrap();
        assert_eq!(tree_to_ndpf(&t), nd("1133444"));
        assert_eq!(ndpf_to_tree(&nd("1133444")).unwrap(), t);
        assert_eq!(decompose(&nd("1133444")).unwrap(), (nd("11"), nd("1222")));
    }

    #[test]
    fn combs() {
        assert_eq!(tree_to_ndpf(&BinaryTree::left_comb(3)), nd("123"));
        assert_eq!(tree_to_ndpf(&BinaryTree::right_comb(3)), nd("111"));
        assert_eq!(tree_to_ndpf(&"(.,.)".parse().unwrap()), nd("1"));
    }

    #[test]
    fn round_trips() {
        for n in 0..=8 {
            for t in BinaryTree::all(n) {
                assert_eq!(ndpf_to_tree(&tree_to_ndpf(&t)).unwrap(), t);
            }
            for pi in ndpfs(n) {
                assert_eq!(tree_to_ndpf(&ndpf_to_tree(&pi).unwrap()), pi);
            }
        }
    }

    #[test]
    fn involution_tables() {
        let table = [
            ("1", "1"),
            ("12", "11"),
            ("123", "111"),
            ("113", "112"),
            ("122", "122"),
            ("1234", "1111"),
            ("1134", "1112"),
            ("1224", "1122"),
            ("1124", "1113"),
            ("1114", "1123"),
            ("1233", "1222"),
            ("1133", "1223"),
        ];
        for (a, b) in table {
            assert_eq!(iota(&nd(a)).unwrap(), nd(b), "{a}");
            assert_eq!(iota(&nd(b)).unwrap(), nd(a), "{b}");
        }
    }

    #[test]
    fn canopy_partition() {
        for n in 1..=7 {
            assert!(canopy_evaluation_correspondence(n).unwrap());
        }
        assert_eq!(canopy_block_sizes(4), [1, 1, 1, 1, 2, 2, 3, 3]);
    }
}
