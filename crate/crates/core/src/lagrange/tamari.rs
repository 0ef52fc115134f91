//! The Tamari order transported to nondecreasing parking functions.

use super::bijection::{ndpf_to_tree, tree_to_ndpf};
use crate::combinat::{packed_evaluation, BinaryTree, Composition, Ndpf};
use crate::error::Result;
use std::collections::{BTreeMap, BTreeSet};

/// The Tamari lattice on trees with `n` nodes, oriented so that `1ⁿ`
/// (the right comb) is the minimum: `T ≤ T'` when `T'` is reached from `T`
/// by left rotations `(A, (B, C)) → ((A, B), C)`.
pub struct Tamari {
    trees: Vec<BinaryTree>,
    index: BTreeMap<BinaryTree, usize>,
    /// `above[i]` holds every `j` with `trees[i] ≤ trees[j]`.
    above: Vec<BTreeSet<usize>>,
    covers: Vec<Vec<usize>>,
}

impl Tamari {
    pub fn new(n: usize) -> Self {
        let trees = BinaryTree::all(n);
        let index: BTreeMap<BinaryTree, usize> = trees.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let covers: Vec<Vec<usize>> = trees
            .iter()
            .map(|t| {
                let mut c: Vec<usize> = t.left_rotations().iter().map(|u| index[u]).collect();
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect();
        let above = (0..trees.len())
            .map(|i| {
                let mut seen = BTreeSet::from([i]);
                let mut stack = vec![i];
                while let Some(j) = stack.pop() {
                    for &k in &covers[j] {
                        if seen.insert(k) {
                            stack.push(k);
                        }
                    }
                }
                seen
            })
            .collect();
        Tamari { trees, index, above, covers }
    }

    pub fn leq(&self, a: &BinaryTree, b: &BinaryTree) -> bool {
        self.above[self.index[a]].contains(&self.index[b])
    }

    /// Hasse diagram as pairs `(upper, lower)` of parking functions.
    pub fn hasse_ndpf(&self) -> Vec<(Ndpf, Ndpf)> {
        let mut out: Vec<(Ndpf, Ndpf)> = self
            .covers
            .iter()
            .enumerate()
            .flat_map(|(i, up)| {
                up.iter().map(move |&j| (tree_to_ndpf(&self.trees[j]), tree_to_ndpf(&self.trees[i])))
            })
            .collect();
        out.sort();
        out
    }

    /// Whether `set` is an interval `[min, max]`; returns its size when it is.
    pub fn interval_size(&self, set: &[BinaryTree]) -> Option<usize> {
        let ids: BTreeSet<usize> = set.iter().map(|t| self.index[t]).collect();
        let min = ids.iter().copied().find(|&m| ids.iter().all(|j| self.above[m].contains(j)))?;
        let max = ids.iter().copied().find(|&m| ids.iter().all(|&j| self.above[j].contains(&m)))?;
        let interval: BTreeSet<usize> = self.above[min].iter().copied().filter(|&j| self.above[j].contains(&max)).collect();
        (interval == ids).then_some(ids.len())
    }
}

pub fn tamari_leq(a: &BinaryTree, b: &BinaryTree) -> bool {
    a.size() == b.size() && Tamari::new(a.size()).leq(a, b)
}

/// Parking functions with packed evaluation `I`, checked to form a Tamari interval.
pub fn tamari_interval_check(i: &Composition) -> Result<(bool, usize)> {
    let n = i.size() as usize;
    let lattice = Tamari::new(n);
    tamari_interval_check_in(&lattice, i)
}

pub fn tamari_interval_check_in(lattice: &Tamari, i: &Composition) -> Result<(bool, usize)> {
    let class: Vec<BinaryTree> = crate::combinat::ndpfs(i.size() as usize)
        .into_iter()
        .filter(|pi| packed_evaluation(pi.letters()) == i.parts())
        .map(|pi| ndpf_to_tree(&pi))
        .collect::<Result<_>>()?;
    Ok(match lattice.interval_size(&class) {
        Some(size) => (true, size),
        None => (false, class.len()),
    })
}
