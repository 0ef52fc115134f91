use super::composition::Composition;
use super::word::{self, parse_word, Letter};
use super::words::{Ndpf, ParkingFunction};
use crate::error::{Error, Result};
use crate::exact::Graded;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Parking quasi-ribbon: a nondecreasing parking function with bars allowed
/// only between strictly increasing neighbours.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuasiRibbon {
    word: Ndpf,
    /// Sorted bar positions `i`, meaning a bar between letters `i` and `i + 1`.
    bars: Vec<usize>,
}

impl QuasiRibbon {
    pub fn new(word: Ndpf, mut bars: Vec<usize>) -> Result<Self> {
        bars.sort_unstable();
        bars.dedup();
        let w = word.letters();
        for &i in &bars {
            if i == 0 || i >= w.len() || w[i - 1] >= w[i] {
                return Err(Error::InvariantViolation(format!(
                    "bar at position {i} of {word} is not at a strict ascent"
                )));
            }
        }
        Ok(QuasiRibbon { word, bars })
    }

    pub fn unbarred(word: Ndpf) -> Self {
        QuasiRibbon { word, bars: Vec::new() }
    }

    pub fn empty() -> Self {
        QuasiRibbon::unbarred(Ndpf::empty())
    }

    pub fn word(&self) -> &Ndpf {
        &self.word
    }

    pub fn bars(&self) -> &[usize] {
        &self.bars
    }

    pub fn bar_count(&self) -> usize {
        self.bars.len()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Lengths of the barred segments.
    pub fn shape(&self) -> Composition {
        let n = self.len();
        if n == 0 {
            return Composition::empty();
        }
        let mut cuts = vec![0];
        cuts.extend(&self.bars);
        cuts.push(n);
        Composition::new(cuts.windows(2).map(|p| (p[1] - p[0]) as u32).collect())
            .expect("segments are nonempty")
    }

    /// All parking functions whose hypoplactic class is `self`.
    pub fn class_members(&self) -> Vec<ParkingFunction> {
        word::distinct_rearrangements(self.word.letters())
            .into_iter()
            .filter(|a| word_recoils(a) == self.bars)
            .map(ParkingFunction::new_unchecked)
            .collect()
    }

    /// `q' ≻ q''`: shift by length, no bar at the junction.
    pub fn tridup_succ(&self, other: &QuasiRibbon) -> QuasiRibbon {
        let n = self.len();
        let word = self.word.succ(&other.word);
        let bars = self.bars.iter().copied().chain(other.bars.iter().map(|b| b + n)).collect();
        QuasiRibbon { word, bars }
    }

    /// `q' ≺ q''`: shift by `max(q') − 1`, bars kept.
    pub fn tridup_prec(&self, other: &QuasiRibbon) -> Result<QuasiRibbon> {
        if self.is_empty() {
            return Err(Error::EmptyLeftOperand { op: "tridup_prec" });
        }
        let n = self.len();
        let word = self.word.prec(&other.word)?;
        let bars = self.bars.iter().copied().chain(other.bars.iter().map(|b| b + n)).collect();
        Ok(QuasiRibbon { word, bars })
    }

    /// `q' ∘ q''`: shift by length and insert a bar at the junction.
    pub fn tridup_mid(&self, other: &QuasiRibbon) -> QuasiRibbon {
        let mut out = self.tridup_succ(other);
        if !self.is_empty() && !other.is_empty() {
            out.bars.push(self.len());
            out.bars.sort_unstable();
        }
        out
    }
}

fn word_recoils(a: &[Letter]) -> Vec<usize> {
    word::recoils(&word::standardize(a))
}

/// The hypoplactic class `P(a)`: the sorted word with bars at the recoils of `std(a)`.
pub fn hypoplactic_quasi_ribbon(a: &ParkingFunction) -> Result<QuasiRibbon> {
    QuasiRibbon::new(a.sorted(), word_recoils(a.letters()))
}

impl Ord for QuasiRibbon {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word.cmp(&other.word).then_with(|| self.bars.cmp(&other.bars))
    }
}

impl PartialOrd for QuasiRibbon {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Graded for QuasiRibbon {
    fn degree(&self) -> usize {
        self.len()
    }
}

impl fmt::Display for QuasiRibbon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.word.letters();
        let sep = if w.iter().any(|&a| a >= 10) { "," } else { "" };
        for (i, a) in w.iter().enumerate() {
            if i > 0 {
                f.write_str(if self.bars.contains(&i) { "|" } else { sep })?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for QuasiRibbon {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let wide = s.contains(',');
        let segment = |seg: &str| -> Result<Vec<Letter>> {
            if wide && !seg.is_empty() {
                seg.split(',')
                    .map(|a| {
                        a.trim()
                            .parse::<Letter>()
                            .map_err(|_| Error::Parse { input: s.to_string(), what: "quasi-ribbon" })
                    })
                    .collect()
            } else {
                parse_word(seg)
            }
        };
        let build = |seg_parser: &dyn Fn(&str) -> Result<Vec<Letter>>| -> Result<Self> {
            let mut letters = Vec::new();
            let mut bars = Vec::new();
            for (k, seg) in s.split('|').enumerate() {
                if k > 0 {
                    bars.push(letters.len());
                }
                let part = seg_parser(seg)?;
                if (k > 0 || s.contains('|')) && part.is_empty() {
                    return Err(Error::Parse { input: s.to_string(), what: "quasi-ribbon" });
                }
                letters.extend(part);
            }
            QuasiRibbon::new(Ndpf::new(letters)?, bars)
        };
        // Without commas, fully barred words with letters >= 10 print one number per segment.
        build(&segment).or_else(|e| {
            if wide {
                return Err(e);
            }
            build(&|seg: &str| {
                seg.parse::<Letter>()
                    .map(|a| vec![a])
                    .map_err(|_| Error::Parse { input: s.to_string(), what: "quasi-ribbon" })
            })
            .map_err(|_| e)
        })
    }
}
