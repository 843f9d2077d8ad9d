//! The box-neighbor-set preserving bijection between the classes
//! [`BoxClass::Bp1`] and [`BoxClass::Bp3`].

use super::{BoxClass, BoxWord, Letter};
use crate::error::{Error, Result};

/// Which branch of the construction produced (or inverts) a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhiCase {
    /// `a1 □ y ...` becomes `y □ a1 ...`.
    I,
    /// The smallest letter `t` of the region moves from the front to right after `a1`.
    II1Front,
    /// `t` moves from right after `a1` to the front.
    II1After,
    /// `a1 x □ y` loses `x □ y`, which reappears at the front as `y □ x`.
    II2,
    /// A leading `a □ y` is moved to right after `a1` as `y □ a`.
    II3,
}

fn int(l: Letter) -> u32 {
    l.int().expect("integer letter")
}

fn min_pos(w: &[Letter]) -> usize {
    let a1 = w.iter().filter_map(|l| l.int()).min().unwrap();
    w.iter().position(|&l| l == Letter::Int(a1)).unwrap()
}

/// Applies the map to a word of class `Bp1`, reporting the branch used.
pub fn phi_with_case(word: &BoxWord) -> Result<(BoxWord, PhiCase)> {
    if word.classify() != Some(BoxClass::Bp1) {
        return Err(Error::WrongClass(format!("{word} is not in the first class")));
    }
    let mut w = word.letters().to_vec();
    let n = w.len();
    let j = min_pos(&w);
    if j == 0 {
        w.swap(0, 2);
        return Ok((BoxWord::from_letters_unchecked(w), PhiCase::I));
    }
    // `a` is the left neighbor of the first box, at index `i`; `x` is the left
    // neighbor of the first box after `a1`, at index `k` (or `k = n`).
    let i = w.iter().position(|l| l.is_box()).unwrap() - 1;
    let a = int(w[i]);
    let k = w[j..].iter().position(|l| l.is_box()).map_or(n, |b| j + b - 1);
    let x = if k < n { Some(int(w[k])) } else { None };
    let below_ax = |t: u32| t < a && x.is_none_or(|x| t < x);

    // The region T is the first segment without `a` plus the letters strictly
    // between `a1` and `x`; both pieces increase, so its minimum is one of
    // their first letters.
    let front = (i > 0).then(|| int(w[0]));
    let after = (j + 1 < k).then(|| int(w[j + 1]));
    let t = match (front, after) {
        (Some(p), Some(q)) => Some(p.min(q)),
        (p, q) => p.or(q),
    };
    if let Some(t) = t.filter(|&t| below_ax(t)) {
        if front == Some(t) {
            let t = w.remove(0);
            w.insert(j, t);
            return Ok((BoxWord::from_letters_unchecked(w), PhiCase::II1Front));
        }
        let t = w.remove(j + 1);
        w.insert(0, t);
        return Ok((BoxWord::from_letters_unchecked(w), PhiCase::II1After));
    }
    if let Some(xv) = x {
        if k == j + 1 && xv < int(w[0]) {
            let moved: Vec<Letter> = w.drain(k..k + 3).collect();
            let mut out = vec![moved[2], Letter::Box, moved[0]];
            out.extend(w);
            return Ok((BoxWord::from_letters_unchecked(out), PhiCase::II2));
        }
    }
    if i == 0 && (j + 1 == n || int(w[j + 1]) > a) {
        let moved: Vec<Letter> = w.drain(0..3).collect();
        let at = j - 3 + 1;
        w.splice(at..at, [moved[2], Letter::Box, moved[0]]);
        return Ok((BoxWord::from_letters_unchecked(w), PhiCase::II3));
    }
    Err(Error::WrongClass(format!("no branch of the construction applies to {word}")))
}

pub fn phi(word: &BoxWord) -> Result<BoxWord> {
    phi_with_case(word).map(|(w, _)| w)
}

/// The five inverse conditions, evaluated independently on a word of class
/// `Bp3`, in the order `I, II1After, II2, II1Front, II3`. Exactly one of them
/// holds on every such word.
pub fn phi_inverse_conditions(word: &BoxWord) -> [(PhiCase, bool); 5] {
    let w = word.letters();
    let n = w.len();
    let p = min_pos(w);
    let pos = p + 1;
    let f = int(w[0]);
    let next = w.get(p + 1).and_then(|l| l.int());
    let second_box = w.get(1).is_some_and(|l| l.is_box());
    let f_below_n = next.is_some_and(|nv| f < nv);
    let f_above_n = next.is_some_and(|nv| f > nv);
    let n_before_box = w.get(p + 2).is_some_and(|l| l.is_box());
    [
        (PhiCase::I, pos == 3 && second_box && (n == 3 || f_below_n)),
        (PhiCase::II1After, pos >= 5 && !second_box && (pos == n || f_below_n)),
        (PhiCase::II2, pos >= 7 && second_box && (pos == n || f_below_n)),
        (PhiCase::II1Front, pos >= 3 && f_above_n && !n_before_box),
        (PhiCase::II3, pos >= 3 && f_above_n && n_before_box),
    ]
}

pub fn phi_inv(word: &BoxWord) -> Result<BoxWord> {
    if word.classify() != Some(BoxClass::Bp3) {
        return Err(Error::WrongClass(format!("{word} is not in the third class")));
    }
    let case = phi_inverse_conditions(word)
        .into_iter()
        .find_map(|(c, holds)| holds.then_some(c))
        .ok_or_else(|| Error::WrongClass(format!("no inverse branch applies to {word}")))?;
    let mut w = word.letters().to_vec();
    let p = min_pos(&w);
    match case {
        PhiCase::I => w.swap(0, 2),
        PhiCase::II1After => {
            let t = w.remove(0);
            w.insert(p, t);
        }
        PhiCase::II2 => {
            let moved: Vec<Letter> = w.drain(0..3).collect();
            let at = p - 3 + 1;
            w.splice(at..at, [moved[2], Letter::Box, moved[0]]);
        }
        PhiCase::II1Front => {
            let t = w.remove(p + 1);
            w.insert(0, t);
        }
        PhiCase::II3 => {
            let moved: Vec<Letter> = w.drain(p + 1..p + 4).collect();
            let mut out = vec![moved[2], Letter::Box, moved[0]];
            out.extend(w);
            w = out;
        }
    }
    BoxWord::new(w)
}
