//! Noncommutative Lagrange inversion: `g = Σ S_n g^n` and its lifts.
//!
//! The lift to `CQSym` is the fixed point `G = 1 + B(G, G)` with
//! `B(F, G) = F ≻ x ≺ G`, expanded over binary trees.

pub mod bijection;
pub mod tamari;

pub use bijection::{canopy_evaluation_correspondence, decompose, iota, ndpf_to_tree, tree_to_ndpf};
pub use tamari::{tamari_interval_check, tamari_leq, Tamari};

use crate::combinat::{compositions, ndpfs, BinaryTree, Composition, Ndpf, Permutation};
use crate::error::{Error, Result};
use crate::exact::{LinComb, Ring};
use crate::hopf::{fqsym, istar_on_cqsym, Cqsym, Fqsym};
use crate::symfun::{SymBasis, SymElem};

/// Homogeneous components `0..=order` of a graded series.
#[derive(Clone, PartialEq, Debug)]
pub struct GradedSeries<E> {
    components: Vec<E>,
}

impl<E> GradedSeries<E> {
    pub fn from_components(components: Vec<E>) -> Self {
        GradedSeries { components }
    }

    pub fn component(&self, n: usize) -> Option<&E> {
        self.components.get(n)
    }

    pub fn components(&self) -> &[E] {
        &self.components
    }

    pub fn order(&self) -> usize {
        self.components.len().saturating_sub(1)
    }
}

fn sym_zero<C: Ring>() -> SymElem<C> {
    SymElem::zero(SymBasis::S)
}

fn s_k<C: Ring>(k: u32, extended: bool) -> SymElem<C> {
    if extended {
        SymElem::s(Composition::extended(vec![k]))
    } else {
        SymElem::s_n(k)
    }
}

/// Degree `0..=order` part of `a · b`.
fn truncated_product<C: Ring>(a: &[SymElem<C>], b: &[SymElem<C>], order: usize) -> Result<Vec<SymElem<C>>> {
    let mut out = vec![sym_zero(); order + 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate().take(order + 1 - i.min(order + 1)) {
            if i + j <= order {
                out[i + j] = out[i + j].try_add(&x.s_product(y)?)?;
            }
        }
    }
    Ok(out)
}

/// Solves `h = Σ_{k ≥ k0} S_k h^k` degree by degree, `k0 ∈ {0, 1}`.
fn solve<C: Ring>(order: usize, extended: bool) -> Result<GradedSeries<SymElem<C>>> {
    let h0 = if extended { s_k(0, true) } else { SymElem::one(SymBasis::S) };
    let mut h = vec![h0];
    // powers[k][m]: degree-m component of h^k.
    let mut powers: Vec<Vec<SymElem<C>>> = vec![vec![SymElem::one(SymBasis::S)]];
    for n in 1..=order {
        // Extend h^k through degree n - k using h_0..h_{n-1}.
        for k in 1..=n {
            if powers.len() <= k {
                powers.push(Vec::new());
            }
            while powers[k].len() <= n - k {
                let m = powers[k].len();
                let mut acc = sym_zero();
                for j in 0..=m {
                    if let Some(prev) = powers[k - 1].get(m - j) {
                        acc = acc.try_add(&h[j].s_product(prev)?)?;
                    }
                }
                powers[k].push(acc);
            }
        }
        let mut hn = sym_zero();
        for k in 1..=n {
            hn = hn.try_add(&s_k(k as u32, extended).s_product(&powers[k][n - k])?)?;
        }
        h.push(hn);
    }
    Ok(GradedSeries::from_components(h))
}

/// `g = Σ_{n≥0} S_n g^n` through degree `order`.
pub fn solve_g<C: Ring>(order: usize) -> Result<GradedSeries<SymElem<C>>> {
    solve(order, false)
}

/// `f = Σ_{k≥0} S_k f^k` with `S_0` kept as a degree-zero letter.
pub fn solve_f<C: Ring>(order: usize) -> Result<GradedSeries<SymElem<C>>> {
    solve(order, true)
}

/// `f_n = Σ_{π ∈ NDPF_n} S^{ev(π)·0}`, the evaluation padded to length `n`.
pub fn f_closed_form<C: Ring>(n: usize) -> SymElem<C> {
    let terms = ndpfs(n)
        .into_iter()
        .map(|pi| {
            let mut ev = crate::combinat::evaluation(pi.letters());
            ev.resize(n, 0);
            ev.push(0);
            (Composition::extended(ev), C::one())
        })
        .collect();
    SymElem::from_terms(SymBasis::S, terms)
}

/// Degree-wise difference `Σ_k S_k h^k − h` recomputed by full truncated products.
pub fn fixed_point_residual<C: Ring>(h: &GradedSeries<SymElem<C>>, extended: bool) -> Result<Vec<SymElem<C>>> {
    let order = h.order();
    let first = usize::from(!extended);
    let mut rhs = vec![sym_zero(); order + 1];
    if !extended {
        rhs[0] = SymElem::one(SymBasis::S);
    }
    let mut power = {
        let mut p = vec![sym_zero(); order + 1];
        p[0] = SymElem::one(SymBasis::S);
        p
    };
    for k in 0..=order {
        if k >= first {
            for (m, part) in power.iter().enumerate() {
                if k + m <= order {
                    rhs[k + m] = rhs[k + m].try_add(&s_k(k as u32, extended).s_product(part)?)?;
                }
            }
        }
        power = truncated_product(&power, h.components(), order)?;
    }
    rhs.iter().zip(h.components()).map(|(r, c)| Ok(r - c)).collect()
}

/// `B(F, G) = F ≻ x ≺ G` in `CQSym`; on keys `B(α, β) = (α • 1) ∘ β`.
pub fn b_cqsym<C: Ring>(f: &Cqsym<C>, g: &Cqsym<C>) -> Cqsym<C> {
    let one = Ndpf::new_unchecked(vec![1]);
    f.bilinear(g, |a, b| {
        LinComb::basis(a.succ(&one).prec(b).expect("α • 1 is never empty"))
    })
}

/// `B(F, G) = F ≻ x ≺ G` in `FQSym` with `x = G_1` and unit conventions
/// `B(1, 1) = x`, `B(F, 1) = F ≻ x`, `B(1, G) = x ≺ G`.
pub fn b_fqsym<C: Ring>(f: &Fqsym<C>, g: &Fqsym<C>) -> Fqsym<C> {
    let x: Fqsym<C> = LinComb::basis(Permutation::identity(1));
    f.bilinear(g, |a, b| {
        let left = if a.is_empty() { x.clone() } else { fqsym::right(&LinComb::basis(a.clone()), &x) };
        if b.is_empty() {
            left
        } else {
            fqsym::left(&left, &LinComb::basis(b.clone()))
        }
    })
}

/// `B_T(1)`: leaves read as `1`, nodes as `B`.
pub fn tree_term<E: Clone>(t: &BinaryTree, one: &E, b: &impl Fn(&E, &E) -> E) -> E {
    match t.children() {
        None => one.clone(),
        Some((l, r)) => b(&tree_term(l, one, b), &tree_term(r, one, b)),
    }
}

fn cqsym_one<C: Ring>() -> Cqsym<C> {
    LinComb::basis(Ndpf::empty())
}

fn fqsym_one<C: Ring>() -> Fqsym<C> {
    LinComb::basis(Permutation::empty())
}

/// `G = Σ_T B_T(1)` over trees with at most `order` nodes.
pub fn solve_g_cqsym<C: Ring>(order: usize) -> GradedSeries<Cqsym<C>> {
    let one = cqsym_one();
    GradedSeries::from_components(
        (0..=order)
            .map(|n| {
                BinaryTree::all(n).iter().fold(LinComb::zero(), |acc, t| acc + tree_term(t, &one, &b_cqsym))
            })
            .collect(),
    )
}

/// `X = Σ_T B_T(1)` in `FQSym`.
pub fn solve_x_fqsym<C: Ring>(order: usize) -> GradedSeries<Fqsym<C>> {
    let one = fqsym_one();
    GradedSeries::from_components(
        (0..=order)
            .map(|n| {
                BinaryTree::all(n).iter().fold(LinComb::zero(), |acc, t| acc + tree_term(t, &one, &b_fqsym))
            })
            .collect(),
    )
}

/// `1 + B(H, H) − H`, degree by degree.
pub fn b_residual<K: Ord + Clone, C: Ring>(
    h: &GradedSeries<LinComb<K, C>>,
    one: LinComb<K, C>,
    b: impl Fn(&LinComb<K, C>, &LinComb<K, C>) -> LinComb<K, C>,
) -> Vec<LinComb<K, C>> {
    let order = h.order();
    let parts = h.components();
    (0..=order)
        .map(|n| {
            let mut rhs = if n == 0 { one.clone() } else { LinComb::zero() };
            if n > 0 {
                for i in 0..n {
                    rhs += &b(&parts[i], &parts[n - 1 - i]);
                }
            }
            rhs - parts[n].clone()
        })
        .collect()
}

pub fn g_cqsym_residual<C: Ring>(h: &GradedSeries<Cqsym<C>>) -> Vec<Cqsym<C>> {
    b_residual(h, cqsym_one(), b_cqsym)
}

pub fn x_fqsym_residual<C: Ring>(h: &GradedSeries<Fqsym<C>>) -> Vec<Fqsym<C>> {
    b_residual(h, fqsym_one(), b_fqsym)
}

/// Every `B_T(1)` in `CQSym` is the single basis element `P^{π(T)}`.
pub fn tree_terms_are_single_keys(n: usize) -> Result<()> {
    let one = cqsym_one::<i64>();
    for t in BinaryTree::all(n) {
        let term = tree_term(&t, &one, &b_cqsym);
        let expected = tree_to_ndpf(&t);
        if term != LinComb::basis(expected.clone()) {
            return Err(Error::InvariantViolation(format!("B_{t}(1) = {term}, expected P^{expected}")));
        }
    }
    Ok(())
}

/// The tree terms of `X_n` have disjoint supports covering all of `S_n` with
/// coefficient one.
pub fn fqsym_tree_supports(n: usize) -> Result<Vec<Vec<Permutation>>> {
    let one = fqsym_one::<i64>();
    let mut seen = std::collections::BTreeSet::new();
    let mut blocks = Vec::new();
    for t in BinaryTree::all(n) {
        let term = tree_term(&t, &one, &b_fqsym);
        let mut block = Vec::new();
        for (sigma, c) in term.iter() {
            if *c != 1 || !seen.insert(sigma.clone()) {
                return Err(Error::InvariantViolation(format!("B_{t}(1) overlaps at {sigma}")));
            }
            block.push(sigma.clone());
        }
        blocks.push(block);
    }
    let total = crate::exact::factorial(n as u32) as usize;
    if seen.len() != total {
        return Err(Error::InvariantViolation(format!("{} of {total} permutations covered", seen.len())));
    }
    Ok(blocks)
}

/// `[S^I] g_n = [S^{I~}] g_n` for every composition of `n`.
pub fn symmetry_of_g(order: usize) -> Result<bool> {
    let g = solve_g::<i64>(order)?;
    for (n, gn) in g.components().iter().enumerate() {
        for i in compositions(n as u32) {
            if gn.coeff(&i) != gn.coeff(&i.conjugate()?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `φ(G) = g` through degree `order`, with `φ(P^π) = S^{t(π)}`.
pub fn phi_of_g(order: usize) -> Result<bool> {
    let g = solve_g::<i64>(order)?;
    let big = solve_g_cqsym::<i64>(order);
    Ok(big.components().iter().zip(g.components()).all(|(a, b)| &istar_on_cqsym(a) == b))
}

/// Pairs of nonempty `(π', π'')` of total degree at most `max` on which the
/// product rule for `Q^π = P^{ι(π)}` fails. The rule read is
/// `Q^{π'} Q^{π''} = Q^{π'≺π''}`, or `Q^{π''≺π'}` when `reversed`.
pub fn q_basis_product_failures(max: usize, reversed: bool) -> Result<Vec<(Ndpf, Ndpf)>> {
    let mut failures = Vec::new();
    for n in 2..=max {
        for k in 1..n {
            for a in ndpfs(k) {
                for b in ndpfs(n - k) {
                    let prec = if reversed { b.prec(&a)? } else { a.prec(&b)? };
                    if iota(&a)?.succ(&iota(&b)?) != iota(&prec)? {
                        failures.push((a.clone(), b));
                    }
                }
            }
        }
    }
    Ok(failures)
}

/// `Q^{π'} Q^{π''} = Q^{π'≺π''}` through total degree `max`. This fails from
/// degree 3 on: the mirror is an anti-automorphism, `ι(π') • ι(π'') = ι(π'' ∘ π')`.
pub fn q_basis_product_check(max: usize) -> Result<bool> {
    Ok(q_basis_product_failures(max, false)?.is_empty())
}

/// `Q^{π'} Q^{π''} = Q^{π''≺π'}`, which holds.
pub fn q_basis_product_check_reversed(max: usize) -> Result<bool> {
    Ok(q_basis_product_failures(max, true)?.is_empty())
}

/// `t(ι(π)) = t(π)~`: under `φ` the involution becomes conjugation.
pub fn iota_conjugates_evaluations(max: usize) -> Result<bool> {
    for n in 1..=max {
        for pi in ndpfs(n) {
            let lhs = Composition::new(iota(&pi)?.packed_evaluation())?;
            let rhs = Composition::new(pi.packed_evaluation())?.conjugate()?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
