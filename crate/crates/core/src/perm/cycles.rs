use std::fmt;
use std::str::FromStr;

use super::{parse_letters, Permutation};
use crate::error::{Error, Result};

/// Disjoint cycles covering `[n]`. Each cycle is rotated so that its minimum
/// comes first and cycles are sorted by minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleSystem {
    cycles: Vec<Vec<u32>>,
}

/// Rotates a cycle so that its minimum letter comes first.
pub(crate) fn rotate_to_min(cycle: &mut [u32]) {
    if let Some(pos) = cycle.iter().enumerate().min_by_key(|(_, &x)| x).map(|(i, _)| i) {
        cycle.rotate_left(pos);
    }
}

/// Cyclic ascents of a single cycle; the wrap-around pair counts.
pub fn casc(cycle: &[u32]) -> usize {
    let k = cycle.len();
    (0..k).filter(|&i| cycle[i] < cycle[(i + 1) % k]).count()
}

impl CycleSystem {
    pub fn new(cycles: Vec<Vec<u32>>) -> Result<Self> {
        let n: usize = cycles.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for c in &cycles {
            if c.is_empty() {
                return Err(Error::Parse("empty cycle".into()));
            }
            for &x in c {
                if x == 0 || x as usize > n {
                    return Err(Error::OutOfRange { letter: x, n });
                }
                if seen[x as usize] {
                    return Err(Error::Duplicate(x));
                }
                seen[x as usize] = true;
            }
        }
        Ok(Self::canonical(cycles))
    }

    fn canonical(mut cycles: Vec<Vec<u32>>) -> Self {
        for c in cycles.iter_mut() {
            rotate_to_min(c);
        }
        cycles.sort_by_key(|c| c[0]);
        CycleSystem { cycles }
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        let n = p.len();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut c = vec![start];
            seen[start as usize] = true;
            let mut x = p.image(start);
            while x != start {
                seen[x as usize] = true;
                c.push(x);
                x = p.image(x);
            }
            cycles.push(c);
        }
        CycleSystem { cycles }
    }

    pub fn to_permutation(&self) -> Permutation {
        let mut word = vec![0; self.len()];
        for c in &self.cycles {
            for (i, &x) in c.iter().enumerate() {
                word[x as usize - 1] = c[(i + 1) % c.len()];
            }
        }
        Permutation::from_word_unchecked(word)
    }

    pub fn cycles(&self) -> &[Vec<u32>] {
        &self.cycles
    }

    pub fn into_cycles(self) -> Vec<Vec<u32>> {
        self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Sum over cycles of `min(casc, cdes)`.
    pub fn exc_tilde(&self) -> usize {
        self.cycles
            .iter()
            .map(|c| {
                let a = casc(c);
                a.min(c.len() - a)
            })
            .sum()
    }

    pub fn is_odd_order(&self) -> bool {
        self.cycles.iter().all(|c| c.len() % 2 == 1)
    }
}

impl fmt::Display for CycleSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Splits `"(a b c)(d e)"` into the text inside each pair of parentheses.
pub(crate) fn split_groups(s: &str, open: char, close: char) -> Result<Vec<&str>> {
    let mut groups = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        if !rest.starts_with(open) {
            return Err(Error::Parse(format!("expected '{open}' at {rest:?}")));
        }
        let end = rest.find(close).ok_or_else(|| Error::Parse(format!("unclosed '{open}'")))?;
        groups.push(&rest[1..end]);
        rest = rest[end + 1..].trim_start();
    }
    Ok(groups)
}

impl FromStr for CycleSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cycles = split_groups(s, '(', ')')?
            .into_iter()
            .map(parse_letters)
            .collect::<Result<Vec<_>>>()?;
        CycleSystem::new(cycles)
    }
}
