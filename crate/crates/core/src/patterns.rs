//! Classical pattern containment, avoidance counts, the ballot recurrences
//! for 213 and 231 avoiders, and descent-preserving Wilf maps.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{count_class, parse_letters, Class, Permutation};
use crate::recurrence::{CountTable, Rule};

/// A classical pattern, stored in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    word: Vec<u32>,
}

impl Pattern {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        Ok(Pattern { word: Permutation::new(word)?.into_word() })
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_contained_in(&self, w: &[u32]) -> bool {
        contains(w, self)
    }

    /// Whether `prefix` has an occurrence that uses its last letter. When a
    /// word is built one letter at a time and pruned as soon as this holds,
    /// every surviving word avoids the pattern.
    pub fn completes_occurrence(&self, prefix: &[u32]) -> bool {
        let k = self.word.len();
        let Some((&last, rest)) = prefix.split_last() else { return false };
        if k == 0 {
            return true;
        }
        if k == 1 {
            return true;
        }
        if k == 3 {
            let p = &self.word;
            let (lt12, lt13, lt23) = (p[0] < p[1], p[0] < p[2], p[1] < p[2]);
            for (j, &y) in rest.iter().enumerate() {
                if (y < last) != lt23 {
                    continue;
                }
                if rest[..j].iter().any(|&x| (x < y) == lt12 && (x < last) == lt13) {
                    return true;
                }
            }
            return false;
        }
        let mut chosen = Vec::with_capacity(k);
        subsequence_search(rest, k - 1, &mut chosen, &mut |c| {
            let mut full = c.to_vec();
            full.push(last);
            order_isomorphic(&full, &self.word)
        })
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.word {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Accepts `"213"` (single digits) as well as `"2 1 3"`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if !t.is_empty() && t.chars().all(|c| c.is_ascii_digit()) && t.len() < 10 {
            return Pattern::new(t.chars().map(|c| c.to_digit(10).unwrap()).collect());
        }
        Pattern::new(parse_letters(t)?)
    }
}

fn order_isomorphic(a: &[u32], b: &[u32]) -> bool {
    a.len() == b.len()
        && (0..a.len()).all(|i| (0..a.len()).all(|j| (a[i] < a[j]) == (b[i] < b[j])))
}

fn subsequence_search(w: &[u32], k: usize, chosen: &mut Vec<u32>, hit: &mut impl FnMut(&[u32]) -> bool) -> bool {
    if chosen.len() == k {
        return hit(chosen);
    }
    let need = k - chosen.len();
    for i in 0..w.len() {
        if w.len() - i < need {
            break;
        }
        chosen.push(w[i]);
        let found = subsequence_search(&w[i + 1..], k, chosen, hit);
        chosen.pop();
        if found {
            return true;
        }
    }
    false
}

/// Reference containment test: tries every subsequence of length `|p|`.
pub fn contains_naive(w: &[u32], p: &Pattern) -> bool {
    let mut chosen = Vec::with_capacity(p.len());
    subsequence_search(w, p.len(), &mut chosen, &mut |c| order_isomorphic(c, &p.word))
}

/// Whether some subsequence of `w` is order-isomorphic to `p`. Patterns of
/// length 3 use a quadratic scan over the middle letter.
pub fn contains(w: &[u32], p: &Pattern) -> bool {
    if p.len() != 3 {
        return contains_naive(w, p);
    }
    let q = &p.word;
    let (lt12, lt13, lt32) = (q[0] < q[1], q[0] < q[2], q[2] < q[1]);
    for (j, &y) in w.iter().enumerate() {
        // Extreme admissible letters on each side of the middle letter `y`.
        let left = w[..j].iter().filter(|&&x| (x < y) == lt12);
        let right = w[j + 1..].iter().filter(|&&z| (z < y) == lt32);
        let found = if lt13 {
            match (left.min(), right.max()) {
                (Some(a), Some(c)) => a < c,
                _ => false,
            }
        } else {
            match (left.max(), right.min()) {
                (Some(a), Some(c)) => a > c,
                _ => false,
            }
        };
        if found {
            return true;
        }
    }
    false
}

/// Number of members of `class` of length `n` avoiding `p`.
pub fn avoid_count(class: Class, n: usize, p: &Pattern) -> u64 {
    count_class(class, n, Some(p))
}

/// The recurrences counting 213-avoiding (`E`, and its alternate form
/// `EAlt`) and 231-avoiding (`G`) `(h, b)`-ballot permutations: entry
/// `(n, h, b)` counts such permutations of length `n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BallotRecurrence {
    E,
    EAlt,
    G,
}

impl FromStr for BallotRecurrence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "E" | "e" => Ok(BallotRecurrence::E),
            "E_alt" | "e_alt" | "EAlt" => Ok(BallotRecurrence::EAlt),
            "G" | "g" => Ok(BallotRecurrence::G),
            _ => Err(Error::Parse(format!("unknown recurrence {s:?}"))),
        }
    }
}

pub fn ballot_recurrence_table(id: BallotRecurrence, n_max: usize, h_max: usize) -> CountTable {
    let rule = match id {
        BallotRecurrence::E => Rule::Gessel,
        BallotRecurrence::EAlt => Rule::GesselAlt,
        BallotRecurrence::G => Rule::Gb,
    };
    CountTable::build(rule, n_max, h_max)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WilfMap {
    /// 213-avoiders to 312-avoiders.
    Varphi,
    /// 132-avoiders to 231-avoiders.
    Eta,
}

impl WilfMap {
    pub fn source(self) -> Pattern {
        match self {
            WilfMap::Varphi => Pattern { word: vec![2, 1, 3] },
            WilfMap::Eta => Pattern { word: vec![1, 3, 2] },
        }
    }

    pub fn target(self) -> Pattern {
        match self {
            WilfMap::Varphi => Pattern { word: vec![3, 1, 2] },
            WilfMap::Eta => Pattern { word: vec![2, 3, 1] },
        }
    }
}

impl FromStr for WilfMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "varphi" | "varphi_213_to_312" => Ok(WilfMap::Varphi),
            "eta" | "eta_132_to_231" => Ok(WilfMap::Eta),
            _ => Err(Error::Parse(format!("unknown map {s:?}"))),
        }
    }
}

fn standardize(w: &[u32]) -> Vec<u32> {
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    w.iter().map(|x| sorted.binary_search(x).unwrap() as u32 + 1).collect()
}

/// Splits at the pivot (the letter 1 for `Varphi`, the largest letter for
/// `Eta`), maps both blocks recursively and reassembles them in the same
/// order. The forward map gives the block before the pivot the smaller
/// values; the inverse gives it the larger ones.
fn block_map(which: WilfMap, w: &[u32], forward: bool) -> Vec<u32> {
    let m = w.len() as u32;
    if m == 0 {
        return Vec::new();
    }
    let pivot = match which {
        WilfMap::Varphi => 1,
        WilfMap::Eta => m,
    };
    let p = w.iter().position(|&x| x == pivot).unwrap();
    let left = block_map(which, &standardize(&w[..p]), forward);
    let right = block_map(which, &standardize(&w[p + 1..]), forward);
    let (nl, nr) = (left.len() as u32, right.len() as u32);
    let low = match which {
        WilfMap::Varphi => 1,
        WilfMap::Eta => 0,
    };
    let (left_shift, right_shift) = if forward { (low, low + nl) } else { (low + nr, low) };
    let mut out = Vec::with_capacity(w.len());
    out.extend(left.iter().map(|x| x + left_shift));
    out.push(pivot);
    out.extend(right.iter().map(|x| x + right_shift));
    out
}

/// Descent-set preserving bijection from avoiders of `which.source()` to
/// avoiders of `which.target()`.
pub fn wilf_map(which: WilfMap, p: &Permutation) -> Result<Permutation> {
    if which.source().is_contained_in(p.word()) {
        return Err(Error::WrongClass(format!("{p} contains {}", which.source())));
    }
    Ok(Permutation::from_word_unchecked(block_map(which, p.word(), true)))
}

pub fn wilf_map_inv(which: WilfMap, p: &Permutation) -> Result<Permutation> {
    if which.target().is_contained_in(p.word()) {
        return Err(Error::WrongClass(format!("{p} contains {}", which.target())));
    }
    Ok(Permutation::from_word_unchecked(block_map(which, p.word(), false)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::enumerate_class;

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn parse_forms() {
        assert_eq!(pat("213"), pat("2 1 3"));
        assert!("113".parse::<Pattern>().is_err());
    }

    #[test]
    fn fast_matches_naive() {
        let patterns: Vec<Pattern> = enumerate_class(Class::All, 3, None)
            .into_iter()
            .map(|p| Pattern::new(p.into_word()).unwrap())
            .collect();
        for n in 0..=7 {
            for w in enumerate_class(Class::All, n, None) {
                for p in &patterns {
                    assert_eq!(contains(w.word(), p), contains_naive(w.word(), p), "{w} {p}");
                }
            }
        }
    }

    #[test]
    fn examples() {
        assert!(!contains(&[3, 2, 1], &pat("123")));
        assert!(contains(&[8, 3, 9, 1, 6, 4, 7, 5, 2], &pat("213")));
        assert!(contains_naive(&[3, 1, 6], &pat("213")));
        assert!(contains(&[1, 2], &pat("1")));
        assert!(!contains(&[], &pat("1")));
    }

    #[test]
    fn prefix_pruning_generic_length() {
        let p = pat("2413");
        for n in 0..=7 {
            let want = enumerate_class(Class::All, n, None).iter().filter(|w| !contains_naive(w.word(), &p)).count();
            assert_eq!(avoid_count(Class::All, n, &p) as usize, want);
        }
    }

    #[test]
    fn wilf_small_cases() {
        let p: Permutation = "2 1".parse().unwrap();
        assert_eq!(wilf_map(WilfMap::Varphi, &p).unwrap(), p);
        assert_eq!(wilf_map(WilfMap::Eta, &p).unwrap(), p);
        let q: Permutation = "3 1 2".parse().unwrap();
        assert_eq!(wilf_map(WilfMap::Varphi, &q).unwrap().to_string(), "2 1 3");
        assert!(wilf_map(WilfMap::Varphi, &"2 1 3".parse().unwrap()).is_err());
    }
}
