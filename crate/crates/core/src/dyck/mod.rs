//! Maximal Dyck factors and the main bijection between ballot permutations
//! and odd order permutations.
//!
//! Letters of a word (or cycle) are joined by steps: up when the letter
//! increases, down when it decreases. The cluster extension adds flat links
//! (consecutive letters of the same cluster), so every routine here works on
//! letters together with a flag per link saying whether it is flat. For plain
//! permutations all flags are `false`.

mod extract;
mod insert;

use std::fmt;

use crate::boxperm::{psi, psi_inv, BoxWord, CyclicBoxPerm};
use crate::error::{Error, Result};
use crate::perm::{CycleSystem, Permutation};

pub use extract::{extract_cyclic, extract_cyclic_covered, extract_linear, extract_linear_covered};
pub use insert::{insert_cyclic, insert_linear};

pub(crate) use extract::{cycle_chain_factors, linear_chain_factors, step as step_value};
pub(crate) use insert::{insert_cycle_chain, insert_linear_chain};

/// A maximal Dyck (or, with flat links, Motzkin) factor of a word or cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckFactor {
    word: Vec<u32>,
    flat: Vec<bool>,
    cycle: Option<usize>,
    start: usize,
}

impl DyckFactor {
    pub(crate) fn new(word: Vec<u32>, flat: Vec<bool>, cycle: Option<usize>, start: usize) -> Self {
        debug_assert_eq!(flat.len() + 1, word.len());
        DyckFactor { word, flat, cycle, start }
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// `flat()[i]` holds when letters `i` and `i + 1` lie in the same cluster.
    pub fn flat(&self) -> &[bool] {
        &self.flat
    }

    pub fn first(&self) -> u32 {
        self.word[0]
    }

    pub fn last(&self) -> u32 {
        *self.word.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Index of the source cycle, for factors taken from a cycle system.
    pub fn cycle(&self) -> Option<usize> {
        self.cycle
    }

    /// Position of the first letter in the source word or cycle.
    pub fn start(&self) -> usize {
        self.start
    }

    pub fn reversed(&self) -> DyckFactor {
        let mut word = self.word.clone();
        word.reverse();
        let mut flat = self.flat.clone();
        flat.reverse();
        DyckFactor { word, flat, cycle: self.cycle, start: self.start }
    }

    /// The factor read in whichever direction makes its word smaller.
    pub fn normalized_word(&self) -> Vec<u32> {
        let mut rev = self.word.clone();
        rev.reverse();
        rev.min(self.word.clone())
    }
}

impl fmt::Display for DyckFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearDecomposition {
    pub factors: Vec<DyckFactor>,
    pub skeleton: BoxWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicDecomposition {
    pub factors: Vec<DyckFactor>,
    pub skeleton: CyclicBoxPerm,
}

/// The bijection from ballot permutations to odd order permutations: cut out
/// the maximal Dyck factors, map the resulting box-permutation with
/// [`psi`], and put the factors back into the boxes.
pub fn psi_map(p: &Permutation) -> Result<CycleSystem> {
    let dec = extract_linear(p)?;
    insert_cyclic(&psi(&dec.skeleton), &dec.factors)
}

pub fn psi_map_inv(cs: &CycleSystem) -> Result<Permutation> {
    if !cs.is_odd_order() {
        let len = cs.cycles().iter().map(Vec::len).find(|l| l % 2 == 0).unwrap();
        return Err(Error::EvenCycle(len));
    }
    let dec = extract_cyclic(cs)?;
    insert_linear(&psi_inv(&dec.skeleton)?, &dec.factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn cs(s: &str) -> CycleSystem {
        s.parse().unwrap()
    }

    const PI: &str = "4 6 10 13 12 1 3 2 7 16 20 9 11 14 15 5 18 19 8 17";
    const IMAGE: &str = "(6 2 3 1 12 13 10)(4)(16 5 15 14 11 9 20)(7)(8 18 19)(17)";

    #[test]
    fn worked_example() {
        assert_eq!(psi_map(&p(PI)).unwrap(), cs(IMAGE));
        assert_eq!(psi_map_inv(&cs(IMAGE)).unwrap(), p(PI));
    }

    #[test]
    fn small_cases() {
        assert_eq!(psi_map(&p("1 3 2")).unwrap(), cs("(1 3 2)"));
        assert_eq!(psi_map(&p("2 3 1")).unwrap(), cs("(1 2 3)"));
        assert_eq!(psi_map(&p("1 2 3 4")).unwrap(), cs("(1)(2)(3)(4)"));
        assert_eq!(psi_map(&p("")).unwrap(), cs(""));
        assert!(psi_map(&p("2 1")).is_err());
        assert!(psi_map_inv(&cs("(1 2)")).is_err());
    }
}
