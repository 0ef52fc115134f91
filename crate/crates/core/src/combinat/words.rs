//! Validated word families used as basis keys.

use super::word::{self, format_word, parse_word, Letter};
use crate::error::{Error, Result};
use crate::exact::Graded;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

macro_rules! word_family {
    ($(#[$meta:meta])* $name:ident, $what:literal, $check:expr) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
        pub struct $name(Vec<Letter>);

        impl $name {
            pub fn new(letters: Vec<Letter>) -> Result<Self> {
                let check: fn(&[Letter]) -> bool = $check;
                if check(&letters) {
                    Ok($name(letters))
                } else {
                    Err(Error::InvalidWord { word: letters, reason: concat!("not a ", $what) })
                }
            }

            /// Skips validation; callers guarantee the invariant.
            pub(crate) fn new_unchecked(letters: Vec<Letter>) -> Self {
                debug_assert!(($check)(&letters), concat!("not a ", $what));
                $name(letters)
            }

            pub fn empty() -> Self {
                $name(Vec::new())
            }

            pub fn letters(&self) -> &[Letter] {
                &self.0
            }

            pub fn into_letters(self) -> Vec<Letter> {
                self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn max_letter(&self) -> Letter {
                self.0.iter().copied().max().unwrap_or(0)
            }
        }

        /// Graded order: shorter words first, then lexicographic.
        impl Ord for $name {
            fn cmp(&self, other: &Self) -> Ordering {
                self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
            }
        }

        impl PartialOrd for $name {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }

        impl Graded for $name {
            fn degree(&self) -> usize {
                self.0.len()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&format_word(&self.0))
            }
        }

        impl FromStr for $name {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                $name::new(parse_word(s)?)
            }
        }

        impl TryFrom<Vec<Letter>> for $name {
            type Error = Error;
            fn try_from(v: Vec<Letter>) -> Result<Self> {
                $name::new(v)
            }
        }
    };
}

fn is_permutation(w: &[Letter]) -> bool {
    let mut seen = vec![false; w.len()];
    w.iter().all(|&a| {
        let i = a as usize;
        (1..=w.len()).contains(&i) && !std::mem::replace(&mut seen[i - 1], true)
    })
}

fn is_packed(w: &[Letter]) -> bool {
    w.iter().all(|&a| a >= 1) && word::pack(w) == w
}

fn is_ndpf(w: &[Letter]) -> bool {
    word::is_nondecreasing(w) && word::is_parking(w)
}

word_family!(
    /// A word whose nondecreasing reordering `a↑` satisfies `a↑_i ≤ i`.
    ParkingFunction, "parking function", word::is_parking
);
word_family!(
    /// A nondecreasing parking function.
    Ndpf, "nondecreasing parking function", is_ndpf
);
word_family!(Permutation, "permutation", is_permutation);
word_family!(
    /// A word whose letters form an initial interval `{1..r}`.
    PackedWord, "packed word", is_packed
);

impl ParkingFunction {
    pub fn sorted(&self) -> Ndpf {
        Ndpf::new_unchecked(word::sort_ascending(&self.0))
    }

    pub fn standardize(&self) -> Permutation {
        Permutation::new_unchecked(word::standardize(&self.0))
    }

    pub fn packed_evaluation(&self) -> Vec<u32> {
        word::packed_evaluation(&self.0)
    }
}

impl Ndpf {
    pub fn as_parking(&self) -> ParkingFunction {
        ParkingFunction::new_unchecked(self.0.clone())
    }

    pub fn packed_evaluation(&self) -> Vec<u32> {
        word::packed_evaluation(&self.0)
    }

    /// `α • β`.
    pub fn succ(&self, other: &Ndpf) -> Ndpf {
        Ndpf::new_unchecked(word::shifted_concat_len(&self.0, &other.0))
    }

    /// `α ∘ β`; errors on empty `α`.
    pub fn prec(&self, other: &Ndpf) -> Result<Ndpf> {
        Ok(Ndpf::new_unchecked(word::shifted_concat_max(&self.0, &other.0)?))
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as Letter).collect())
    }

    pub fn inverse(&self) -> Permutation {
        Permutation(word::inverse_permutation(&self.0))
    }

    pub fn recoils(&self) -> Vec<usize> {
        word::recoils(&self.0)
    }

    pub fn descents(&self) -> Vec<usize> {
        word::descents(&self.0)
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.0.len()];
        let mut cycles = 0;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize - 1;
            }
        }
        cycles
    }
}

impl PackedWord {
    pub fn standardize(&self) -> Permutation {
        Permutation::new_unchecked(word::standardize(&self.0))
    }
}
