//! The box-neighbor-set preserving bijection from box-permutations to cyclic
//! box-permutations on the same support.

use super::{phi, phi_inv, BoxClass, BoxCycle, BoxWord, CyclicBoxPerm, Letter, Orientation};
use crate::error::{Error, Result};

/// Factors out one cycle at a time, always the one containing the smallest
/// remaining letter `a1`:
/// - class `Bp2`: the fixed point `(a1)`;
/// - class `Bp3` with `a1` at position `2l+1`: the cycle `(a1 π_1 ... π_2l)`;
/// - class `Bp1`: apply [`phi`] and take the reverse cycle `(a1 π'_2l ... π'_1)`.
///
/// The rest of the word (after `a1`) is a box-permutation on what is left.
pub fn psi(word: &BoxWord) -> CyclicBoxPerm {
    let mut cycles = Vec::new();
    let mut rest = word.clone();
    while let Some(class) = rest.classify() {
        let (cur, reverse) = match class {
            BoxClass::Bp2 => {
                let l = rest.letters();
                cycles.push(BoxCycle::fixed_point(l[0].int().unwrap()));
                rest = BoxWord::from_letters_unchecked(l[1..].to_vec());
                continue;
            }
            BoxClass::Bp3 => (rest, false),
            BoxClass::Bp1 => (phi(&rest).expect("first class word has an image"), true),
        };
        let l = cur.letters();
        let a1 = *cur.support().first().unwrap();
        let p = l.iter().position(|&x| x == Letter::Int(a1)).unwrap();
        let mut cyc = vec![Letter::Int(a1)];
        if reverse {
            cyc.extend(l[..p].iter().rev());
        } else {
            cyc.extend(&l[..p]);
        }
        cycles.push(BoxCycle::new(cyc).expect("factored cycle is a box-cycle"));
        rest = BoxWord::from_letters_unchecked(l[p + 1..].to_vec());
    }
    CyclicBoxPerm::new(cycles).expect("factored cycles are disjoint")
}

/// Rebuilds the word by peeling cycles in increasing order of their smallest
/// letter, prepending each cycle's prefix to the word built from the later
/// cycles, and undoing [`phi`] after reverse cycles.
pub fn psi_inv(c: &CyclicBoxPerm) -> Result<BoxWord> {
    // Cycles are sorted by smallest letter, which is also the first letter.
    let mut word: Vec<Letter> = Vec::new();
    for cycle in c.cycles().iter().rev() {
        let l = cycle.letters();
        let mut prefix: Vec<Letter> = match cycle.orientation() {
            Orientation::FixedPoint => Vec::new(),
            Orientation::Forward => l[1..].to_vec(),
            Orientation::Reverse => l[1..].iter().rev().copied().collect(),
        };
        prefix.push(l[0]);
        prefix.extend(word);
        let w = BoxWord::new(prefix)?;
        word = match cycle.orientation() {
            Orientation::Reverse => phi_inv(&w)?.into_letters(),
            _ => w.into_letters(),
        };
    }
    BoxWord::new(word).map_err(|e| Error::InvalidBoxCycle(format!("{c}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BoxWord {
        s.parse().unwrap()
    }

    fn c(s: &str) -> CyclicBoxPerm {
        s.parse().unwrap()
    }

    #[test]
    fn worked_examples() {
        for (src, dst) in [
            (
                "4 6 # 2 7 16 # 9 11 14 # 5 18 # 8 17",
                "(6 2 #)(4)(16 5 # 14 11 9 #)(7)(8 18 #)(17)",
            ),
            (
                "2 # 8 9 # 7 14 17 18 # 4 11 # 5 6 # 16",
                "(8 2 #)(18 17 14 4 #)(16 5 # 11 9 # 7 6 #)",
            ),
            ("1 2 3", "(1)(2)(3)"),
        ] {
            let out = psi(&w(src));
            assert_eq!(out, c(dst), "{src}");
            assert_eq!(out.box_neighbors(), w(src).box_neighbors());
            assert_eq!(psi_inv(&out).unwrap(), w(src));
        }
    }

    #[test]
    fn empty() {
        assert_eq!(psi(&w("")), CyclicBoxPerm::default());
        assert_eq!(psi_inv(&CyclicBoxPerm::default()).unwrap(), w(""));
    }
}
