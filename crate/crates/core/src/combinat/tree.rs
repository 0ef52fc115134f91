use crate::error::{Error, Result};
use crate::exact::Graded;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Unlabeled planar binary tree; size is the number of internal nodes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Side {
    L,
    R,
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, BinaryTree::Leaf)
    }

    pub fn children(&self) -> Option<(&BinaryTree, &BinaryTree)> {
        match self {
            BinaryTree::Leaf => None,
            BinaryTree::Node(l, r) => Some((l, r)),
        }
    }

    /// Every internal node has an empty right subtree.
    pub fn left_comb(n: usize) -> Self {
        (0..n).fold(BinaryTree::Leaf, |t, _| BinaryTree::node(t, BinaryTree::Leaf))
    }

    pub fn right_comb(n: usize) -> Self {
        (0..n).fold(BinaryTree::Leaf, |t, _| BinaryTree::node(BinaryTree::Leaf, t))
    }

    pub fn mirror(&self) -> Self {
        match self {
            BinaryTree::Leaf => BinaryTree::Leaf,
            BinaryTree::Node(l, r) => BinaryTree::node(r.mirror(), l.mirror()),
        }
    }

    /// Orientation of the leaves read left to right, without the first and the last.
    pub fn canopy(&self) -> Vec<Side> {
        fn walk(t: &BinaryTree, side: Side, out: &mut Vec<Side>) {
            match t {
                BinaryTree::Leaf => out.push(side),
                BinaryTree::Node(l, r) => {
                    walk(l, Side::L, out);
                    walk(r, Side::R, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, Side::L, &mut out);
        if out.len() < 2 {
            return Vec::new();
        }
        out[1..out.len() - 1].to_vec()
    }

    /// Trees obtained by one left rotation `(A, (B, C)) → ((A, B), C)` at some node.
    pub fn left_rotations(&self) -> Vec<BinaryTree> {
        let BinaryTree::Node(l, r) = self else {
            return Vec::new();
        };
        let mut out = Vec::new();
        if let BinaryTree::Node(b, c) = r.as_ref() {
            out.push(BinaryTree::node(BinaryTree::node((**l).clone(), (**b).clone()), (**c).clone()));
        }
        for l2 in l.left_rotations() {
            out.push(BinaryTree::node(l2, (**r).clone()));
        }
        for r2 in r.left_rotations() {
            out.push(BinaryTree::node((**l).clone(), r2));
        }
        out
    }

    /// All trees with `n` nodes, ordered by left-subtree size and then recursively.
    pub fn all(n: usize) -> Vec<BinaryTree> {
        let mut table: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Leaf]];
        for m in 1..=n {
            let mut level = Vec::new();
            for k in 0..m {
                for l in &table[k] {
                    for r in &table[m - 1 - k] {
                        level.push(BinaryTree::node(l.clone(), r.clone()));
                    }
                }
            }
            table.push(level);
        }
        table.swap_remove(n)
    }
}

impl Ord for BinaryTree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (BinaryTree::Leaf, BinaryTree::Leaf) => Ordering::Equal,
            (BinaryTree::Leaf, _) => Ordering::Less,
            (_, BinaryTree::Leaf) => Ordering::Greater,
            (BinaryTree::Node(a, b), BinaryTree::Node(c, d)) => self
                .size()
                .cmp(&other.size())
                .then_with(|| a.size().cmp(&c.size()))
                .then_with(|| a.cmp(c))
                .then_with(|| b.cmp(d)),
        }
    }
}

impl PartialOrd for BinaryTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Graded for BinaryTree {
    fn degree(&self) -> usize {
        self.size()
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => f.write_str("."),
            BinaryTree::Node(l, r) => write!(f, "({l},{r})"),
        }
    }
}

impl FromStr for BinaryTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || Error::Parse { input: s.to_string(), what: "binary tree" };
        fn parse(c: &[char], i: &mut usize) -> Option<BinaryTree> {
            match c.get(*i)? {
                '.' => {
                    *i += 1;
                    Some(BinaryTree::Leaf)
                }
                '(' => {
                    *i += 1;
                    let l = parse(c, i)?;
                    (c.get(*i)? == &',').then_some(())?;
                    *i += 1;
                    let r = parse(c, i)?;
                    (c.get(*i)? == &')').then_some(())?;
                    *i += 1;
                    Some(BinaryTree::node(l, r))
                }
                _ => None,
            }
        }
        let mut i = 0;
        let t = parse(&chars, &mut i).ok_or_else(err)?;
        if i == chars.len() {
            Ok(t)
        } else {
            Err(err())
        }
    }
}
