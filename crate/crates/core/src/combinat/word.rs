//! Operations on plain integer words (1-indexed letters).

use crate::error::{Error, Result};
use itertools::Itertools;

pub type Letter = u32;

/// Digit string when every letter is below 10, comma separated otherwise.
pub fn format_word(w: &[Letter]) -> String {
    if w.iter().all(|&a| a < 10) {
        w.iter().map(|a| a.to_string()).collect()
    } else {
        w.iter().join(",")
    }
}

pub fn parse_word(s: &str) -> Result<Vec<Letter>> {
    let s = s.trim();
    let err = || Error::Parse { input: s.to_string(), what: "word" };
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.split(',').map(|p| p.trim().parse::<Letter>().map_err(|_| err())).collect()
    } else {
        s.chars().map(|c| c.to_digit(10).ok_or_else(err)).collect()
    }
}

pub fn sort_ascending(w: &[Letter]) -> Vec<Letter> {
    let mut v = w.to_vec();
    v.sort_unstable();
    v
}

pub fn is_parking(w: &[Letter]) -> bool {
    sort_ascending(w).iter().enumerate().all(|(i, &a)| a >= 1 && a as usize <= i + 1)
}

pub fn is_nondecreasing(w: &[Letter]) -> bool {
    w.windows(2).all(|p| p[0] <= p[1])
}

/// Smallest `d` with fewer than `d` letters `≤ d`, if any.
fn parking_defect(w: &[Letter]) -> Option<Letter> {
    let n = w.len();
    let mut counts = vec![0usize; n + 2];
    for &a in w {
        if (a as usize) <= n {
            counts[a as usize] += 1;
        }
    }
    let mut below = 0;
    for d in 1..=n {
        below += counts[d];
        if below < d {
            return Some(d as Letter);
        }
    }
    None
}

/// Parkization: while some `d` has fewer than `d` letters `≤ d`, decrement every letter `> d`.
pub fn parkize(w: &[Letter]) -> Vec<Letter> {
    let mut w = w.to_vec();
    while let Some(d) = parking_defect(&w) {
        for a in w.iter_mut().filter(|a| **a > d) {
            *a -= 1;
        }
    }
    w
}

/// Standardization with ties broken left to right.
pub fn standardize(w: &[Letter]) -> Vec<Letter> {
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by_key(|&i| (w[i], i));
    let mut out = vec![0; w.len()];
    for (rank, i) in idx.into_iter().enumerate() {
        out[i] = rank as Letter + 1;
    }
    out
}

/// Relabels occurring letters `b_1 < … < b_r` as `1..r`.
pub fn pack(w: &[Letter]) -> Vec<Letter> {
    let alphabet: Vec<Letter> = w.iter().copied().sorted_unstable().dedup().collect();
    w.iter()
        .map(|a| alphabet.binary_search(a).expect("letter present") as Letter + 1)
        .collect()
}

/// `(|w|_1, …, |w|_max)`.
pub fn evaluation(w: &[Letter]) -> Vec<u32> {
    let max = w.iter().copied().max().unwrap_or(0) as usize;
    evaluation_padded(w, max)
}

/// Evaluation padded (or cut) to `len` entries.
pub fn evaluation_padded(w: &[Letter], len: usize) -> Vec<u32> {
    let mut ev = vec![0; len];
    for &a in w {
        if (a as usize) <= len && a >= 1 {
            ev[a as usize - 1] += 1;
        }
    }
    ev
}

/// Evaluation with the zero entries removed.
pub fn packed_evaluation(w: &[Letter]) -> Vec<u32> {
    evaluation(w).into_iter().filter(|&c| c > 0).collect()
}

pub fn shift(w: &[Letter], k: Letter) -> Vec<Letter> {
    w.iter().map(|a| a + k).collect()
}

/// `α • β = α · β[|α|]`.
pub fn shifted_concat_len(a: &[Letter], b: &[Letter]) -> Vec<Letter> {
    let mut out = a.to_vec();
    out.extend(shift(b, a.len() as Letter));
    out
}

/// `α ∘ β = α · β[max(α) − 1]`; undefined for empty `α`.
pub fn shifted_concat_max(a: &[Letter], b: &[Letter]) -> Result<Vec<Letter>> {
    let m = *a.iter().max().ok_or(Error::EmptyLeftOperand { op: "shifted_concat_max" })?;
    let mut out = a.to_vec();
    out.extend(shift(b, m - 1));
    Ok(out)
}

/// All interleavings of `a` with `b[shift]`, with multiplicity
/// (`C(|a|+|b|, |a|)` words, in lexicographic order of the position sets).
pub fn shifted_shuffle(a: &[Letter], b: &[Letter], shift_by: Letter) -> Vec<Vec<Letter>> {
    let n = a.len() + b.len();
    let b = shift(b, shift_by);
    (0..n)
        .combinations(a.len())
        .map(|positions| {
            let mut out = Vec::with_capacity(n);
            let (mut i, mut j) = (0, 0);
            for p in 0..n {
                if i < positions.len() && positions[i] == p {
                    out.push(a[i]);
                    i += 1;
                } else {
                    out.push(b[j]);
                    j += 1;
                }
            }
            out
        })
        .collect()
}

/// In-place lexicographic successor; `false` once the last arrangement is reached.
pub fn next_permutation(v: &mut [Letter]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Distinct rearrangements of a word, lexicographically.
pub fn distinct_rearrangements(w: &[Letter]) -> Vec<Vec<Letter>> {
    let mut cur = sort_ascending(w);
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

/// Positions `i` such that `i + 1` occurs before `i` in the permutation `sigma`.
pub fn recoils(sigma: &[Letter]) -> Vec<usize> {
    let mut pos = vec![0usize; sigma.len() + 1];
    for (p, &a) in sigma.iter().enumerate() {
        pos[a as usize] = p;
    }
    (1..sigma.len()).filter(|&i| pos[i + 1] < pos[i]).collect()
}

/// Positions `i` with `w_i > w_{i+1}`.
pub fn descents(w: &[Letter]) -> Vec<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

pub fn inverse_permutation(sigma: &[Letter]) -> Vec<Letter> {
    let mut inv = vec![0; sigma.len()];
    for (p, &a) in sigma.iter().enumerate() {
        inv[a as usize - 1] = p as Letter + 1;
    }
    inv
}
