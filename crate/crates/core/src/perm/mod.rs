//! Permutations in one-line notation and their statistics.

pub(crate) mod cycles;
mod enumerate;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use cycles::CycleSystem;
pub use enumerate::{count_class, enumerate_class, par_fold_class, visit_class, Class};

/// A permutation of `[n]` in one-line notation, `word[i] = π(i + 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StatRecord {
    pub asc: usize,
    pub des: usize,
    pub exc: usize,
    pub exc_tilde: usize,
}

/// A peak value together with its unordered pair of (cyclic) neighbors,
/// stored as `low < high`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Peak {
    pub value: u32,
    pub low: u32,
    pub high: u32,
}

impl Peak {
    pub fn new(value: u32, a: u32, c: u32) -> Self {
        Peak { value, low: a.min(c), high: a.max(c) }
    }
}

impl fmt::Display for Peak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{{{},{}}})", self.value, self.low, self.high)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PeakRecord {
    pub peak_set: BTreeSet<Peak>,
    pub cpeak_set: BTreeSet<Peak>,
}

/// Heights of the letters along the up/down path of a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallotProfile {
    pub heights: Vec<i64>,
    pub is_ballot: bool,
    pub end_height: i64,
}

impl Permutation {
    /// Validates that `word` is a bijection of `1..=word.len()`.
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x as usize > n {
                return Err(Error::OutOfRange { letter: x, n });
            }
            if seen[x as usize] {
                return Err(Error::Duplicate(x));
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n as u32).collect() }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn into_word(self) -> Vec<u32> {
        self.word
    }

    /// `π(i)` for `1 <= i <= n`.
    pub fn image(&self, i: u32) -> u32 {
        self.word[i as usize - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.word.iter().enumerate() {
            inv[x as usize - 1] = i as u32 + 1;
        }
        Permutation { word: inv }
    }

    pub fn asc(&self) -> usize {
        self.word.windows(2).filter(|w| w[0] < w[1]).count()
    }

    pub fn des(&self) -> usize {
        self.word.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Positions `i` in `[n-1]` with `π(i) > i`.
    pub fn exc(&self) -> usize {
        let n = self.len();
        (1..n).filter(|&i| self.word[i - 1] as usize > i).count()
    }

    pub fn exc_tilde(&self) -> usize {
        self.cycles().exc_tilde()
    }

    pub fn statistics(&self) -> StatRecord {
        StatRecord { asc: self.asc(), des: self.des(), exc: self.exc(), exc_tilde: self.exc_tilde() }
    }

    /// 1-based descent positions.
    pub fn descent_set(&self) -> Vec<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn cycles(&self) -> CycleSystem {
        CycleSystem::from_permutation(self)
    }

    /// Linear neighbors of the value `k`, if it sits strictly inside the word.
    pub fn neighbors(&self, k: u32) -> Option<(u32, u32)> {
        let pos = self.word.iter().position(|&x| x == k)?;
        if pos == 0 || pos + 1 >= self.len() {
            return None;
        }
        Some((self.word[pos - 1], self.word[pos + 1]))
    }

    /// Cyclic neighbors `π⁻¹(k)` and `π(k)` of `k`, if `k` is not fixed.
    pub fn cyclic_neighbors(&self, k: u32) -> Option<(u32, u32)> {
        if self.image(k) == k {
            return None;
        }
        let pre = self.word.iter().position(|&x| x == k).unwrap() as u32 + 1;
        Some((pre, self.image(k)))
    }

    pub fn peaks(&self) -> PeakRecord {
        let mut rec = PeakRecord::default();
        for w in self.word.windows(3) {
            if w[0] < w[1] && w[1] > w[2] {
                rec.peak_set.insert(Peak::new(w[1], w[0], w[2]));
            }
        }
        let inv = self.inverse();
        for k in 1..=self.len() as u32 {
            let (pre, post) = (inv.image(k), self.image(k));
            if pre < k && k > post {
                rec.cpeak_set.insert(Peak::new(k, pre, post));
            }
        }
        rec
    }

    /// Heights of the letters of the path that starts at `start_height` and
    /// steps up on each ascent and down on each descent.
    pub fn ballot_profile(&self, start_height: i64) -> BallotProfile {
        let mut heights = Vec::with_capacity(self.len());
        let mut h = start_height;
        for (i, &x) in self.word.iter().enumerate() {
            if i > 0 {
                h += if self.word[i - 1] < x { 1 } else { -1 };
            }
            heights.push(h);
        }
        let is_ballot = heights.iter().all(|&h| h >= 0) && start_height >= 0;
        BallotProfile { heights, is_ballot, end_height: h }
    }

    pub fn is_ballot(&self) -> bool {
        self.ballot_profile(0).is_ballot
    }

    /// Path from height `h` never goes below zero and ends at height `b`.
    pub fn is_hb_ballot(&self, h: usize, b: usize) -> bool {
        let prof = self.ballot_profile(h as i64);
        prof.is_ballot && prof.end_height == b as i64
    }

    pub fn is_dyck(&self) -> bool {
        self.is_hb_ballot(0, 0)
    }

    pub fn is_odd_order(&self) -> bool {
        self.cycles().cycles().iter().all(|c| c.len() % 2 == 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.word {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

pub(crate) fn parse_letters(text: &str) -> Result<Vec<u32>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("not a positive integer: {t:?}"))))
        .collect()
}

impl FromStr for Permutation {
    type Err = Error;

    /// Space (or comma) separated letters; the empty string is the empty permutation.
    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_letters(s)?)
    }
}
