use std::fmt;
use std::str::FromStr;

use super::{check_distinct, parse_box_letters, write_letters, BoxNeighborSet, Letter};
use crate::error::{Error, Result};
use crate::perm::cycles::split_groups;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    FixedPoint,
    /// Integer runs increase in reading order.
    Forward,
    /// Integer runs decrease in reading order.
    Reverse,
}

/// An odd box-cycle or reverse odd box-cycle, rotated so that its smallest
/// integer comes first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxCycle {
    letters: Vec<Letter>,
    orientation: Orientation,
}

impl BoxCycle {
    pub fn new(mut letters: Vec<Letter>) -> Result<Self> {
        check_distinct(&letters)?;
        let bad = |why: &str, l: &[Letter]| {
            let text: Vec<String> = l.iter().map(Letter::to_string).collect();
            Err(Error::InvalidBoxCycle(format!("({}): {why}", text.join(" "))))
        };
        let Some(min) = letters.iter().filter_map(|l| l.int()).min() else {
            return bad("no integer letter", &letters);
        };
        let start = letters.iter().position(|&l| l == Letter::Int(min)).unwrap();
        letters.rotate_left(start);
        if letters.len() == 1 {
            return Ok(BoxCycle { letters, orientation: Orientation::FixedPoint });
        }
        if letters.len().is_multiple_of(2) {
            return bad("even length", &letters);
        }
        if !letters.iter().any(|l| l.is_box()) {
            return bad("no box", &letters);
        }
        // Rotate a copy to start right after a box so runs do not wrap.
        let first_box = letters.iter().position(|l| l.is_box()).unwrap();
        let mut reading = letters.clone();
        reading.rotate_left(first_box + 1);
        let runs: Vec<&[Letter]> = reading.split(|l| l.is_box()).collect();
        // `reading` ends with a box, so the final split piece is empty.
        let runs = &runs[..runs.len() - 1];
        if runs.iter().any(|r| r.len() < 2) {
            return bad("integer run shorter than two", &letters);
        }
        let orientation = if runs.iter().all(|r| r.windows(2).all(|w| w[0] < w[1])) {
            Orientation::Forward
        } else if runs.iter().all(|r| r.windows(2).all(|w| w[0] > w[1])) {
            Orientation::Reverse
        } else {
            return bad("runs neither all increasing nor all decreasing", &letters);
        };
        Ok(BoxCycle { letters, orientation })
    }

    pub fn fixed_point(a: u32) -> Self {
        BoxCycle { letters: vec![Letter::Int(a)], orientation: Orientation::FixedPoint }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn min(&self) -> u32 {
        self.letters[0].int().unwrap()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn box_neighbor_pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let l = &self.letters;
        let k = l.len();
        (0..k).filter(move |&i| l[i].is_box()).map(move |i| {
            (l[(i + k - 1) % k].int().unwrap(), l[(i + 1) % k].int().unwrap())
        })
    }
}

impl fmt::Display for BoxCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_letters(f, &self.letters)?;
        f.write_str(")")
    }
}

/// A set of box-cycles on disjoint supports, sorted by smallest letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CyclicBoxPerm {
    cycles: Vec<BoxCycle>,
}

impl CyclicBoxPerm {
    pub fn new(mut cycles: Vec<BoxCycle>) -> Result<Self> {
        let all: Vec<Letter> = cycles.iter().flat_map(|c| c.letters.iter().copied()).collect();
        check_distinct(&all)?;
        cycles.sort();
        Ok(CyclicBoxPerm { cycles })
    }

    pub fn cycles(&self) -> &[BoxCycle] {
        &self.cycles
    }

    pub fn into_cycles(self) -> Vec<BoxCycle> {
        self.cycles
    }

    pub fn support(&self) -> Vec<u32> {
        let mut s: Vec<u32> = self.cycles.iter().flat_map(|c| c.letters.iter().filter_map(|l| l.int())).collect();
        s.sort_unstable();
        s
    }

    pub fn box_count(&self) -> usize {
        self.cycles.iter().map(|c| c.letters.iter().filter(|l| l.is_box()).count()).sum()
    }

    pub fn box_neighbors(&self) -> BoxNeighborSet {
        BoxNeighborSet::from_pairs(self.cycles.iter().flat_map(|c| c.box_neighbor_pairs()).collect())
    }
}

impl fmt::Display for CyclicBoxPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for CyclicBoxPerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cycles = split_groups(s, '(', ')')?
            .into_iter()
            .map(|g| BoxCycle::new(parse_box_letters(g)?))
            .collect::<Result<Vec<_>>>()?;
        CyclicBoxPerm::new(cycles)
    }
}
