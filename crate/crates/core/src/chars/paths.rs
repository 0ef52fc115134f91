//! Dyck and Schröder paths and their encodings by parking functions.

use super::signed::SignedParkingFunction;
use crate::combinat::{Letter, Ndpf};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Step {
    U,
    D,
    H,
}

impl Step {
    fn char(self) -> char {
        match self {
            Step::U => 'u',
            Step::D => 'd',
            Step::H => 'h',
        }
    }
}

fn malformed(steps: &[Step], reason: &'static str) -> Error {
    Error::MalformedPath { path: steps.iter().map(|s| s.char()).collect(), reason }
}

fn parse_steps(s: &str) -> Result<Vec<Step>> {
    s.trim()
        .chars()
        .map(|c| match c {
            'u' | 'U' => Ok(Step::U),
            'd' | 'D' => Ok(Step::D),
            'h' | 'H' => Ok(Step::H),
            _ => Err(Error::MalformedPath { path: s.to_string(), reason: "steps are u, d and h" }),
        })
        .collect()
}

fn check_heights(steps: &[Step]) -> Result<()> {
    let mut h = 0i64;
    for s in steps {
        h += match s {
            Step::U => 1,
            Step::D => -1,
            Step::H => 0,
        };
        if h < 0 {
            return Err(malformed(steps, "path goes below the axis"));
        }
    }
    if h != 0 {
        return Err(malformed(steps, "path does not return to the axis"));
    }
    Ok(())
}

/// A Schröder path: steps `u = (1,1)`, `d = (1,−1)`, `h = (2,0)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SchroderPath(Vec<Step>);

/// A Schröder path without horizontal steps.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DyckPath(Vec<Step>);

impl SchroderPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        check_heights(&steps)?;
        Ok(SchroderPath(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn semi_length(&self) -> usize {
        self.0.iter().map(|s| if *s == Step::H { 1 } else { 0 }).sum::<usize>()
            + self.0.iter().filter(|s| **s == Step::U).count()
    }

    pub fn horizontal_count(&self) -> usize {
        self.0.iter().filter(|s| **s == Step::H).count()
    }

    /// Whether a peak `ud` occurs after the last horizontal step.
    pub fn has_peak_after_last_h(&self) -> bool {
        let start = self.0.iter().rposition(|s| *s == Step::H).map_or(0, |p| p + 1);
        self.0[start..].windows(2).any(|w| w == [Step::U, Step::D])
    }
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.contains(&Step::H) {
            return Err(malformed(&steps, "Dyck paths have no horizontal steps"));
        }
        check_heights(&steps)?;
        Ok(DyckPath(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn semi_length(&self) -> usize {
        self.0.len() / 2
    }
}

impl From<DyckPath> for SchroderPath {
    fn from(p: DyckPath) -> Self {
        SchroderPath(p.0)
    }
}

macro_rules! path_text {
    ($t:ident) => {
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.iter().try_for_each(|s| write!(f, "{}", s.char()))
            }
        }

        impl FromStr for $t {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                $t::new(parse_steps(s)?)
            }
        }
    };
}

path_text!(SchroderPath);
path_text!(DyckPath);

/// Diagonal of each up step (or of the peak an `h` replaced), with the
/// replaced peaks flagged. An up step from `(i, h)` lies in diagonal
/// `(i − h)/2 + 1`, one more than the number of down steps before it.
fn diagonals(steps: &[Step]) -> Vec<(Letter, bool)> {
    let mut downs = 0;
    let mut out = Vec::new();
    for s in steps {
        match s {
            Step::U => out.push((downs + 1, false)),
            Step::D => downs += 1,
            Step::H => {
                out.push((downs + 1, true));
                downs += 1;
            }
        }
    }
    out
}

pub fn dyck_encode(p: &DyckPath) -> Ndpf {
    Ndpf::new_unchecked(diagonals(p.steps()).into_iter().map(|(d, _)| d).collect())
}

pub fn dyck_decode(pi: &Ndpf) -> DyckPath {
    let mut steps = Vec::with_capacity(2 * pi.len());
    let mut downs = 0;
    for &d in pi.letters() {
        while downs + 1 < d {
            steps.push(Step::D);
            downs += 1;
        }
        steps.push(Step::U);
    }
    steps.extend(std::iter::repeat(Step::D).take(pi.len() - downs as usize));
    DyckPath(steps)
}

/// Letters in path order, barred where a peak became `h`: `uuhuddhd ↦ 1 1 1̄ 2 4̄`.
pub fn schroder_encode(p: &SchroderPath) -> SignedParkingFunction {
    let values: Vec<i64> = diagonals(p.steps()).into_iter().map(|(d, bar)| if bar { -(d as i64) } else { d as i64 }).collect();
    SignedParkingFunction::from_values(&values).expect("path encodings park")
}

/// Inverse of [`schroder_encode`]; barred letters must sit on peaks.
pub fn schroder_decode(w: &SignedParkingFunction) -> Result<SchroderPath> {
    let letters = w.base().letters();
    let pi = Ndpf::new(letters.to_vec()).map_err(|_| Error::MalformedPath {
        path: w.to_string(),
        reason: "letters must be nondecreasing",
    })?;
    let dyck = dyck_decode(&pi);
    let mut steps = Vec::with_capacity(dyck.0.len());
    let mut ups = 0;
    let mut iter = dyck.0.iter().peekable();
    while let Some(&s) = iter.next() {
        if s == Step::U {
            let bar = w.minus()[ups];
            ups += 1;
            if bar {
                if iter.peek() != Some(&&Step::D) {
                    return Err(Error::MalformedPath { path: w.to_string(), reason: "barred letter is not a peak" });
                }
                iter.next();
                steps.push(Step::H);
                continue;
            }
        }
        steps.push(s);
    }
    Ok(SchroderPath(steps))
}

/// Letters sorted by signed value; the result has no signed inversion.
pub fn schroder_sort(w: &SignedParkingFunction) -> SignedParkingFunction {
    w.sorted()
}

pub fn dyck_paths(n: usize) -> Vec<DyckPath> {
    crate::combinat::ndpfs(n).iter().map(dyck_decode).collect()
}

/// All Schröder paths of semi-length `n`, each `h` counting one unit.
pub fn schroder_paths(n: usize) -> Vec<SchroderPath> {
    fn go(remaining: usize, height: usize, cur: &mut Vec<Step>, out: &mut Vec<SchroderPath>) {
        // `remaining` counts the semi-length still to be spent.
        if remaining == 0 && height == 0 {
            out.push(SchroderPath(cur.clone()));
            return;
        }
        if remaining > 0 {
            cur.push(Step::U);
            go(remaining - 1, height + 1, cur, out);
            cur.pop();
            cur.push(Step::H);
            go(remaining - 1, height, cur, out);
            cur.pop();
        }
        if height > 0 {
            cur.push(Step::D);
            go(remaining, height - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, &mut Vec::new(), &mut out);
    out
}
