//! `WQSym` in the `M` basis, with its tridendriform splitting, and the embedding of `FQSym`.

use super::{Fqsym, Wqsym};
use crate::combinat::word::{inverse_permutation, Letter};
use crate::combinat::PackedWord;
use crate::exact::{LinComb, Ring};
use itertools::Itertools;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Third {
    Left,
    Mid,
    Right,
}

/// `u = v·w` packed with `pack(v) = u'`, `pack(w) = u''`; `third` compares `max(w)` with `max(v)`.
fn convolution<C: Ring>(a: &PackedWord, b: &PackedWord, third: Option<Third>) -> Wqsym<C> {
    let (ra, rb) = (a.max_letter() as usize, b.max_letter() as usize);
    let mut out = LinComb::zero();
    for r in ra.max(rb)..=ra + rb {
        for sa in (1..=r as Letter).combinations(ra) {
            for sb in (1..=r as Letter).combinations(rb) {
                let covered = (1..=r as Letter).all(|v| sa.contains(&v) || sb.contains(&v));
                if !covered {
                    continue;
                }
                let (ma, mb) = (sa.last().copied().unwrap_or(0), sb.last().copied().unwrap_or(0));
                let which = match mb.cmp(&ma) {
                    std::cmp::Ordering::Less => Third::Left,
                    std::cmp::Ordering::Equal => Third::Mid,
                    std::cmp::Ordering::Greater => Third::Right,
                };
                if third.is_some_and(|t| t != which) {
                    continue;
                }
                let mut u: Vec<Letter> = a.letters().iter().map(|&l| sa[l as usize - 1]).collect();
                u.extend(b.letters().iter().map(|&l| sb[l as usize - 1]));
                out.add_term(PackedWord::new_unchecked(u), C::one());
            }
        }
    }
    out
}

pub fn product<C: Ring>(a: &Wqsym<C>, b: &Wqsym<C>) -> Wqsym<C> {
    a.bilinear(b, |u, v| convolution(u, v, None))
}

pub fn third<C: Ring>(which: Third, a: &Wqsym<C>, b: &Wqsym<C>) -> Wqsym<C> {
    a.bilinear(b, |u, v| {
        if u.is_empty() || v.is_empty() {
            // Partial products live on the augmentation ideal.
            return LinComb::zero();
        }
        convolution(u, v, Some(which))
    })
}

pub fn thirds<C: Ring>(a: &Wqsym<C>, b: &Wqsym<C>) -> (Wqsym<C>, Wqsym<C>, Wqsym<C>) {
    (third(Third::Left, a, b), third(Third::Mid, a, b), third(Third::Right, a, b))
}

/// `G_σ ↦ Σ_{std(u) = σ} M_u`.
pub fn embed_fqsym<C: Ring>(a: &Fqsym<C>) -> Wqsym<C> {
    a.linear(|sigma| {
        let n = sigma.len();
        let pos = inverse_permutation(sigma.letters());
        // Values i and i+1 may share a letter only when i sits to the left of i+1.
        let free: Vec<usize> = (1..n).filter(|&i| pos[i - 1] < pos[i]).collect();
        let mut out = LinComb::zero();
        for merged in free.iter().copied().powerset() {
            let mut label = vec![0 as Letter; n + 1];
            let mut cur = 0;
            for v in 1..=n {
                if v == 1 || !merged.contains(&(v - 1)) {
                    cur += 1;
                }
                label[v] = cur;
            }
            let u = sigma.letters().iter().map(|&v| label[v as usize]).collect();
            out.add_term(PackedWord::new_unchecked(u), C::one());
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::word::standardize;
    use crate::combinat::{packed_words, permutations};
    use crate::hopf::fqsym;

    fn m(s: &str) -> Wqsym<i64> {
        LinComb::basis(s.parse().unwrap())
    }

    #[test]
    fn generator_products() {
        assert_eq!(product(&m("1"), &m("1")), m("11") + m("12") + m("21"));
        let (l, mid, r) = thirds(&m("1"), &m("1"));
        assert_eq!(mid, m("11"));
        assert_eq!(l, m("21"));
        assert_eq!(r, m("12"));
    }

    #[test]
    fn convolution_by_brute_force() {
        // All packed words of length |u'|+|u''| whose factors pack to u', u''.
        for a in packed_words(2) {
            for b in packed_words(2) {
                let expect: Wqsym<i64> = packed_words(4)
                    .into_iter()
                    .filter(|u| {
                        let (v, w) = u.letters().split_at(2);
                        crate::combinat::pack(v) == a.letters() && crate::combinat::pack(w) == b.letters()
                    })
                    .map(|u| (u, 1))
                    .collect();
                assert_eq!(product(&LinComb::basis(a.clone()), &LinComb::basis(b.clone())), expect);
            }
        }
    }

    #[test]
    fn embedding() {
        assert_eq!(embed_fqsym::<i64>(&LinComb::basis("1".parse().unwrap())), m("1"));
        assert_eq!(embed_fqsym::<i64>(&LinComb::basis("12".parse().unwrap())), m("12") + m("11"));
        for n in 0..=4 {
            for sigma in permutations(n) {
                let expect: Wqsym<i64> = packed_words(n)
                    .into_iter()
                    .filter(|u| standardize(u.letters()) == sigma.letters())
                    .map(|u| (u, 1))
                    .collect();
                assert_eq!(embed_fqsym(&LinComb::basis(sigma.clone())), expect);
            }
        }
        let g1: Fqsym<i64> = LinComb::basis("1".parse().unwrap());
        assert_eq!(
            embed_fqsym(&fqsym::product(&g1, &g1)),
            product(&embed_fqsym(&g1), &embed_fqsym(&g1))
        );
    }
}
