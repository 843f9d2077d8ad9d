use std::collections::HashMap;

use super::DyckFactor;
use crate::boxperm::{BoxWord, CyclicBoxPerm, Letter};
use crate::error::{Error, Result};
use crate::perm::{CycleSystem, Permutation};

struct Matcher<'a> {
    by_pair: HashMap<(u32, u32), &'a DyckFactor>,
}

impl<'a> Matcher<'a> {
    fn new(factors: &'a [DyckFactor]) -> Result<Self> {
        let mut by_pair = HashMap::new();
        for f in factors {
            let key = (f.first().min(f.last()), f.first().max(f.last()));
            if by_pair.insert(key, f).is_some() {
                return Err(Error::Overlap(format!("two factors with boundary letters {key:?}")));
            }
        }
        Ok(Matcher { by_pair })
    }

    /// The factor for a box between `left` and `right`, oriented so that it
    /// starts at `left`.
    fn take(&mut self, left: u32, right: u32) -> Result<DyckFactor> {
        let f = self
            .by_pair
            .remove(&(left.min(right), left.max(right)))
            .ok_or(Error::UnmatchedBox(left, right))?;
        assert_ne!(f.first(), f.last(), "factor boundary letters are distinct");
        Ok(if f.first() == left { f.clone() } else { f.reversed() })
    }

    fn finish(self) -> Result<()> {
        match self.by_pair.values().next() {
            Some(f) => Err(Error::UnmatchedBox(f.first(), f.last())),
            None => Ok(()),
        }
    }
}

/// Replaces each box of a skeleton by the interior of the factor whose
/// boundary letters flank it, written from the left neighbor to the right
/// neighbor. Returns the letters and, for every letter after the first, the
/// flag of the link into it; when `cyclic` the last flag closes the cycle.
fn fill(skel: &[Letter], m: &mut Matcher<'_>, cyclic: bool) -> Result<(Vec<u32>, Vec<bool>)> {
    let n = skel.len();
    let mut letters = Vec::with_capacity(n);
    let mut links = Vec::with_capacity(n);
    let mut pending = None;
    for i in 0..n {
        match skel[i] {
            Letter::Int(x) => {
                if !letters.is_empty() {
                    links.push(pending.take().unwrap_or(false));
                }
                letters.push(x);
            }
            Letter::Box => {
                let left = *letters.last().expect("box has a left neighbor");
                let right = skel[if cyclic { (i + 1) % n } else { i + 1 }].int().expect("box has a right neighbor");
                let f = m.take(left, right)?;
                let w = f.word();
                for j in 1..w.len() - 1 {
                    links.push(f.flat()[j - 1]);
                    letters.push(w[j]);
                }
                pending = Some(*f.flat().last().unwrap());
            }
        }
    }
    if cyclic && !letters.is_empty() {
        links.push(pending.take().unwrap_or(false));
    }
    Ok((letters, links))
}

pub(crate) fn insert_linear_chain(skel: &[Letter], factors: &[DyckFactor]) -> Result<(Vec<u32>, Vec<bool>)> {
    let mut m = Matcher::new(factors)?;
    let out = fill(skel, &mut m, false)?;
    m.finish()?;
    Ok(out)
}

/// Fills every cycle; the result has one `(letters, links)` pair per cycle.
pub(crate) fn insert_cycle_chain(cycles: &[&[Letter]], factors: &[DyckFactor]) -> Result<Vec<(Vec<u32>, Vec<bool>)>> {
    let mut m = Matcher::new(factors)?;
    let out = cycles.iter().map(|c| fill(c, &mut m, true)).collect::<Result<Vec<_>>>()?;
    m.finish()?;
    Ok(out)
}

fn no_flats(links: &[bool]) -> Result<()> {
    if links.iter().any(|&f| f) {
        return Err(Error::WrongClass("factor with flat links inserted into a permutation".into()));
    }
    Ok(())
}

/// Puts the factors back into the boxes of a box-permutation.
pub fn insert_linear(skeleton: &BoxWord, factors: &[DyckFactor]) -> Result<Permutation> {
    let (letters, links) = insert_linear_chain(skeleton.letters(), factors)?;
    no_flats(&links)?;
    Permutation::new(letters)
}

/// Puts the factors back into the boxes of a cyclic box-permutation: a factor
/// whose first letter precedes the box is written forwards, otherwise
/// backwards.
pub fn insert_cyclic(skeleton: &CyclicBoxPerm, factors: &[DyckFactor]) -> Result<CycleSystem> {
    let cycles: Vec<&[Letter]> = skeleton.cycles().iter().map(|c| c.letters()).collect();
    let filled = insert_cycle_chain(&cycles, factors)?;
    let mut out = Vec::with_capacity(filled.len());
    for (letters, links) in filled {
        no_flats(&links)?;
        out.push(letters);
    }
    CycleSystem::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::{extract_cyclic, extract_linear};

    #[test]
    fn cyclic_example() {
        let cs: CycleSystem = "(6 2 3 1 12 13 10)(4)(16 5 15 14 11 9 20)(7)(8 18 19)(17)".parse().unwrap();
        let d = extract_cyclic(&cs).unwrap();
        assert_eq!(insert_cyclic(&d.skeleton, &d.factors).unwrap(), cs);
    }

    #[test]
    fn linear_round_trip() {
        let p: Permutation = "4 6 10 13 12 1 3 2 7 16 20 9 11 14 15 5 18 19 8 17".parse().unwrap();
        let d = extract_linear(&p).unwrap();
        assert_eq!(insert_linear(&d.skeleton, &d.factors).unwrap(), p);
    }

    #[test]
    fn mismatches() {
        let skel: BoxWord = "1 # 2 4".parse().unwrap();
        assert!(matches!(insert_linear(&skel, &[]), Err(Error::UnmatchedBox(1, 2))));
        let f = DyckFactor::new(vec![1, 3, 2], vec![false, false], None, 0);
        let plain: BoxWord = "1 2 3".parse().unwrap();
        assert!(insert_linear(&plain, std::slice::from_ref(&f)).is_err());
        assert_eq!(insert_linear(&skel, &[f]).unwrap().to_string(), "1 3 2 4");
        assert_eq!(insert_linear(&plain, &[]).unwrap().to_string(), "1 2 3");
    }
}
