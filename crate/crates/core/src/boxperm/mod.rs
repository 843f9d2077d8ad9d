//! Box-permutations and cyclic box-permutations.
//!
//! A box-permutation on a finite set `A` of positive integers is a word over
//! `A ∪ {□}` using every element of `A` once, whose integer segments between
//! boxes are increasing; the first and last segment are nonempty and every
//! middle segment has at least two letters. Without boxes the word is just
//! `A` in increasing order. The box is written `#` in text.

mod cycle;
pub mod oracle;
mod phi;
mod psi;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use cycle::{BoxCycle, CyclicBoxPerm, Orientation};
pub use phi::{phi, phi_inv, phi_inverse_conditions, phi_with_case, PhiCase};
pub use psi::{psi, psi_inv};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Int(u32),
    Box,
}

impl Letter {
    pub fn int(self) -> Option<u32> {
        match self {
            Letter::Int(x) => Some(x),
            Letter::Box => None,
        }
    }

    pub fn is_box(self) -> bool {
        self == Letter::Box
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Int(x) => write!(f, "{x}"),
            Letter::Box => f.write_str("#"),
        }
    }
}

pub(crate) fn parse_box_letters(text: &str) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        // A box may be glued to integers, as in "1#23".
        let mut num = String::new();
        for ch in tok.chars() {
            if ch == '#' || ch == '□' {
                if !num.is_empty() {
                    out.push(Letter::Int(parse_int(&num)?));
                    num.clear();
                }
                out.push(Letter::Box);
            } else {
                num.push(ch);
            }
        }
        if !num.is_empty() {
            out.push(Letter::Int(parse_int(&num)?));
        }
    }
    Ok(out)
}

fn parse_int(t: &str) -> Result<u32> {
    match t.parse::<u32>() {
        Ok(x) if x > 0 => Ok(x),
        _ => Err(Error::Parse(format!("not a positive integer: {t:?}"))),
    }
}

pub(crate) fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    for (i, l) in letters.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

pub(crate) fn check_distinct(letters: &[Letter]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for x in letters.iter().filter_map(|l| l.int()) {
        if !seen.insert(x) {
            return Err(Error::Duplicate(x));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxWord {
    letters: Vec<Letter>,
}

impl BoxWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        check_distinct(&letters)?;
        let segments: Vec<&[Letter]> = letters.split(|l| l.is_box()).collect();
        let bad = |why: &str| Err(Error::InvalidBoxWord(format!("{}: {why}", Letters(&letters))));
        let last = segments.len() - 1;
        for (s, seg) in segments.iter().enumerate() {
            let min_len = if s == 0 || s == last { 1 } else { 2 };
            if letters.is_empty() {
                break;
            }
            if seg.len() < min_len {
                return bad("segment too short");
            }
            if seg.windows(2).any(|w| w[0] >= w[1]) {
                return bad("segment not increasing");
            }
        }
        Ok(BoxWord { letters })
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(BoxWord::new(letters.clone()).is_ok(), "{}", Letters(&letters));
        BoxWord { letters }
    }

    /// The box-free word: `support` in increasing order.
    pub fn sorted(support: &[u32]) -> Self {
        let mut s = support.to_vec();
        s.sort_unstable();
        BoxWord { letters: s.into_iter().map(Letter::Int).collect() }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn box_count(&self) -> usize {
        self.letters.iter().filter(|l| l.is_box()).count()
    }

    /// The integer letters in increasing order.
    pub fn support(&self) -> Vec<u32> {
        let mut s: Vec<u32> = self.letters.iter().filter_map(|l| l.int()).collect();
        s.sort_unstable();
        s
    }

    pub fn classify(&self) -> Option<BoxClass> {
        let a1 = *self.support().first()?;
        let pos = self.letters.iter().position(|&l| l == Letter::Int(a1)).unwrap() + 1;
        Some(if pos % 2 == 0 || (pos == 1 && self.letters.get(1) == Some(&Letter::Box)) {
            BoxClass::Bp1
        } else if pos == 1 {
            BoxClass::Bp2
        } else {
            BoxClass::Bp3
        })
    }

    pub fn box_neighbors(&self) -> BoxNeighborSet {
        let l = &self.letters;
        let pairs = (1..l.len().saturating_sub(1))
            .filter(|&i| l[i].is_box())
            .map(|i| (l[i - 1].int().unwrap(), l[i + 1].int().unwrap()))
            .collect();
        BoxNeighborSet::from_pairs(pairs)
    }
}

struct Letters<'a>(&'a [Letter]);

impl fmt::Display for Letters<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, self.0)
    }
}

impl fmt::Display for BoxWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

impl FromStr for BoxWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoxWord::new(parse_box_letters(s)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoxClass {
    /// Smallest letter at an even position, or first and followed by a box.
    Bp1,
    /// Smallest letter first and not followed by a box.
    Bp2,
    /// Smallest letter at an odd position other than the first.
    Bp3,
}

/// The unordered neighbor pairs of the boxes, one per box.
///
/// Equality compares multisets; [`BoxNeighborSet::as_set`] gives the plain
/// set of pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BoxNeighborSet {
    pairs: Vec<(u32, u32)>,
}

impl BoxNeighborSet {
    pub(crate) fn from_pairs(pairs: Vec<(u32, u32)>) -> Self {
        let mut pairs: Vec<(u32, u32)> = pairs.into_iter().map(|(a, c)| (a.min(c), a.max(c))).collect();
        pairs.sort_unstable();
        BoxNeighborSet { pairs }
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn as_set(&self) -> BTreeSet<(u32, u32)> {
        self.pairs.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl fmt::Display for BoxNeighborSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (a, c)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{{{a},{c}}}")?;
        }
        f.write_str("}")
    }
}
