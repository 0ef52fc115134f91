//! Evaluation-tree rewriting for the duplicial and triduplicial operads.
//!
//! Every relation has the shape `(x a y) b z = x a (y b z)` and is oriented
//! from left to right. A tree is in normal form when no node matches an
//! oriented left-hand side.

use crate::combinat::{Ndpf, QuasiRibbon};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Op {
    Prec,
    Succ,
    Mid,
}

impl Op {
    pub fn symbol(self) -> char {
        match self {
            Op::Prec => '<',
            Op::Succ => '>',
            Op::Mid => 'o',
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Mode {
    /// Operations `≺, ≻`.
    Dup,
    /// Operations `≺, ≻, ∘`.
    Tri,
}

impl Mode {
    pub fn ops(self) -> &'static [Op] {
        match self {
            Mode::Dup => &[Op::Prec, Op::Succ],
            Mode::Tri => &[Op::Prec, Op::Succ, Op::Mid],
        }
    }

    /// Oriented rules `(x a y) b z → x a (y b z)`, listed as `(a, b)`.
    pub fn rules(self) -> &'static [(Op, Op)] {
        use Op::*;
        match self {
            Mode::Dup => &[(Prec, Prec), (Succ, Succ), (Succ, Prec)],
            Mode::Tri => &[(Prec, Prec), (Mid, Mid), (Succ, Succ), (Mid, Prec), (Succ, Prec), (Succ, Mid), (Mid, Succ)],
        }
    }

    fn rewrites(self, inner: Op, outer: Op) -> bool {
        self.rules().contains(&(inner, outer))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum EvalTree {
    Leaf,
    Node(Op, Box<EvalTree>, Box<EvalTree>),
}

impl EvalTree {
    pub fn node(op: Op, l: EvalTree, r: EvalTree) -> Self {
        EvalTree::Node(op, Box::new(l), Box::new(r))
    }

    /// Number of leaves.
    pub fn size(&self) -> usize {
        match self {
            EvalTree::Leaf => 1,
            EvalTree::Node(_, l, r) => l.size() + r.size(),
        }
    }

    pub fn fits(&self, mode: Mode) -> bool {
        match self {
            EvalTree::Leaf => true,
            EvalTree::Node(op, l, r) => mode.ops().contains(op) && l.fits(mode) && r.fits(mode),
        }
    }

    /// Termination measure: the sum over nodes of the size of the left subtree.
    pub fn left_weight(&self) -> usize {
        match self {
            EvalTree::Leaf => 0,
            EvalTree::Node(_, l, r) => l.size() + l.left_weight() + r.left_weight(),
        }
    }

    fn is_redex(&self, mode: Mode) -> bool {
        matches!(self, EvalTree::Node(b, l, _) if matches!(**l, EvalTree::Node(a, _, _) if mode.rewrites(a, *b)))
    }

    fn contract(&self) -> EvalTree {
        let EvalTree::Node(b, l, z) = self else { unreachable!("redex is a node") };
        let EvalTree::Node(a, x, y) = l.as_ref() else { unreachable!("redex has a node on the left") };
        EvalTree::node(*a, (**x).clone(), EvalTree::node(*b, (**y).clone(), (**z).clone()))
    }

    pub fn is_normal(&self, mode: Mode) -> bool {
        match self {
            EvalTree::Leaf => true,
            EvalTree::Node(_, l, r) => !self.is_redex(mode) && l.is_normal(mode) && r.is_normal(mode),
        }
    }

    /// One leftmost-outermost rewrite step.
    pub fn rewrite_step(&self, mode: Mode) -> Option<EvalTree> {
        if self.is_redex(mode) {
            return Some(self.contract());
        }
        match self {
            EvalTree::Leaf => None,
            EvalTree::Node(op, l, r) => {
                if let Some(l2) = l.rewrite_step(mode) {
                    Some(EvalTree::node(*op, l2, (**r).clone()))
                } else {
                    r.rewrite_step(mode).map(|r2| EvalTree::node(*op, (**l).clone(), r2))
                }
            }
        }
    }

    /// Every tree reachable by one rewrite at any position.
    pub fn all_rewrite_steps(&self, mode: Mode) -> Vec<EvalTree> {
        let mut out = Vec::new();
        if self.is_redex(mode) {
            out.push(self.contract());
        }
        if let EvalTree::Node(op, l, r) = self {
            out.extend(l.all_rewrite_steps(mode).into_iter().map(|l2| EvalTree::node(*op, l2, (**r).clone())));
            out.extend(r.all_rewrite_steps(mode).into_iter().map(|r2| EvalTree::node(*op, (**l).clone(), r2)));
        }
        out
    }

    /// Normal form and the number of steps taken.
    pub fn normal_form_counted(&self, mode: Mode) -> (EvalTree, usize) {
        let mut t = self.clone();
        let mut steps = 0;
        while let Some(next) = t.rewrite_step(mode) {
            debug_assert!(next.left_weight() < t.left_weight(), "measure must decrease");
            t = next;
            steps += 1;
        }
        (t, steps)
    }

    pub fn rewrite_normal_form(&self, mode: Mode) -> EvalTree {
        self.normal_form_counted(mode).0
    }

    /// All trees with `n` leaves over the operations of `mode`.
    pub fn all(mode: Mode, n: usize) -> Vec<EvalTree> {
        let mut table: Vec<Vec<EvalTree>> = vec![Vec::new(), vec![EvalTree::Leaf]];
        for m in 2..=n {
            let mut level = Vec::new();
            for k in 1..m {
                for op in mode.ops() {
                    for l in &table[k] {
                        for r in &table[m - k] {
                            level.push(EvalTree::node(*op, l.clone(), r.clone()));
                        }
                    }
                }
            }
            table.push(level);
        }
        table.truncate(n + 1);
        table.pop().unwrap_or_default()
    }

    /// Evaluation in `CQSym` with `P¹` at the leaves.
    pub fn eval_dup(&self) -> Result<Ndpf> {
        match self {
            EvalTree::Leaf => Ok(Ndpf::new_unchecked(vec![1])),
            EvalTree::Node(op, l, r) => {
                let (a, b) = (l.eval_dup()?, r.eval_dup()?);
                match op {
                    Op::Prec => a.prec(&b),
                    Op::Succ => Ok(a.succ(&b)),
                    Op::Mid => Err(Error::InvariantViolation("∘ is not a duplicial operation".into())),
                }
            }
        }
    }

    /// Evaluation in `SQSym` with `P_1` at the leaves.
    pub fn eval_tri(&self) -> Result<QuasiRibbon> {
        match self {
            EvalTree::Leaf => "1".parse(),
            EvalTree::Node(op, l, r) => {
                let (a, b) = (l.eval_tri()?, r.eval_tri()?);
                match op {
                    Op::Prec => a.tridup_prec(&b),
                    Op::Succ => Ok(a.tridup_succ(&b)),
                    Op::Mid => Ok(a.tridup_mid(&b)),
                }
            }
        }
    }
}

/// Number of normal forms with `n` leaves, by dynamic programming on the root operation.
pub fn count_normal_forms(mode: Mode, n: usize) -> u64 {
    if n == 0 {
        return 0;
    }
    let ops = mode.ops();
    // by_root[m][0] counts leaves, by_root[m][1 + i] trees with root ops[i].
    let mut by_root = vec![vec![0u64; ops.len() + 1]; n + 1];
    by_root[1][0] = 1;
    for m in 2..=n {
        for (bi, &b) in ops.iter().enumerate() {
            let mut count = 0;
            for k in 1..m {
                let left: u64 = by_root[k][0]
                    + ops
                        .iter()
                        .enumerate()
                        .filter(|(_, &a)| !mode.rewrites(a, b))
                        .map(|(ai, _)| by_root[k][1 + ai])
                        .sum::<u64>();
                count += left * by_root[m - k].iter().sum::<u64>();
            }
            by_root[m][1 + bi] = count;
        }
    }
    by_root[n].iter().sum()
}

/// The structural description of normal forms: a leaf, a node whose left child
/// is a leaf, or `(x ≺ A) b B` with `b ∈ {∘, ≻}`, all subtrees normal.
pub fn matches_shape(t: &EvalTree, mode: Mode) -> bool {
    match t {
        EvalTree::Leaf => true,
        EvalTree::Node(b, l, r) => {
            let left_ok = match l.as_ref() {
                EvalTree::Leaf => true,
                EvalTree::Node(Op::Prec, x, a) => {
                    matches!(**x, EvalTree::Leaf) && *b != Op::Prec && matches_shape(a, mode)
                }
                _ => false,
            };
            left_ok && mode.ops().contains(b) && matches_shape(r, mode)
        }
    }
}

/// The shape description agrees with the fixed-point set on all trees with `n` leaves.
pub fn normal_form_shape_check(mode: Mode, n: usize) -> bool {
    EvalTree::all(mode, n).iter().all(|t| t.is_normal(mode) == matches_shape(t, mode))
}

/// Normal forms that avoid the extra relations of the Koszul dual:
/// `(x ≺ y) ∗ z = 0` and `x ≺ (y ∗ z) = 0` for `∗ ∈ {≻, ∘}`.
pub fn dual_basis_trees(mode: Mode, n: usize) -> Vec<EvalTree> {
    fn killed(t: &EvalTree) -> bool {
        match t {
            EvalTree::Leaf => false,
            EvalTree::Node(b, l, r) => {
                let left = *b != Op::Prec && matches!(**l, EvalTree::Node(Op::Prec, _, _));
                let right = *b == Op::Prec && matches!(**r, EvalTree::Node(o, _, _) if o != Op::Prec);
                left || right || killed(l) || killed(r)
            }
        }
    }
    EvalTree::all(mode, n).into_iter().filter(|t| t.is_normal(mode) && !killed(t)).collect()
}

/// Hook-shaped expressions `x ∗ ⋯ ∗ x ≺ ⋯ ≺ x` with `∗` a non-`≺` operation, as right combs.
pub fn hook_trees(mode: Mode, n: usize) -> Vec<EvalTree> {
    if n == 0 {
        return Vec::new();
    }
    let stars: Vec<Op> = mode.ops().iter().copied().filter(|&o| o != Op::Prec).collect();
    let mut out = Vec::new();
    for j in 0..n {
        // j star operations followed by n − 1 − j precs.
        let mut words: Vec<Vec<Op>> = vec![Vec::new()];
        for _ in 0..j {
            words = words.into_iter().flat_map(|w| stars.iter().map(move |&s| [w.clone(), vec![s]].concat())).collect();
        }
        for mut w in words {
            w.extend(std::iter::repeat(Op::Prec).take(n - 1 - j));
            let t = w.iter().rev().fold(EvalTree::Leaf, |acc, &op| EvalTree::node(op, EvalTree::Leaf, acc));
            out.push(t);
        }
    }
    out
}

impl fmt::Display for EvalTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalTree::Leaf => f.write_str("x"),
            EvalTree::Node(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
        }
    }
}

impl FromStr for EvalTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        fn parse(c: &[char], i: &mut usize) -> Option<EvalTree> {
            match c.get(*i)? {
                'x' => {
                    *i += 1;
                    Some(EvalTree::Leaf)
                }
                '(' => {
                    *i += 1;
                    let l = parse(c, i)?;
                    let op = match c.get(*i)? {
                        '<' => Op::Prec,
                        '>' => Op::Succ,
                        'o' => Op::Mid,
                        _ => return None,
                    };
                    *i += 1;
                    let r = parse(c, i)?;
                    (c.get(*i)? == &')').then_some(())?;
                    *i += 1;
                    Some(EvalTree::node(op, l, r))
                }
                _ => None,
            }
        }
        let mut i = 0;
        match parse(&tokens, &mut i) {
            Some(t) if i == tokens.len() => Ok(t),
            _ => Err(Error::Parse { input: s.to_string(), what: "evaluation tree" }),
        }
    }
}
