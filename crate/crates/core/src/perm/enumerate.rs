//! Lexicographic enumeration of permutation classes with prefix pruning.

use rayon::prelude::*;

use super::Permutation;
use crate::patterns::Pattern;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Class {
    All,
    Ballot,
    OddOrder,
    Dyck,
    /// Path from height `h` stays nonnegative and ends at height `b`.
    HbBallot { h: usize, b: usize },
}

impl Class {
    fn start_height(self) -> Option<i64> {
        match self {
            Class::Ballot | Class::Dyck => Some(0),
            Class::HbBallot { h, .. } => Some(h as i64),
            Class::All | Class::OddOrder => None,
        }
    }

    fn end_height(self) -> Option<i64> {
        match self {
            Class::Dyck => Some(0),
            Class::HbBallot { b, .. } => Some(b as i64),
            _ => None,
        }
    }

    pub fn contains(self, p: &Permutation) -> bool {
        match self {
            Class::All => true,
            Class::Ballot => p.is_ballot(),
            Class::OddOrder => p.is_odd_order(),
            Class::Dyck => p.is_dyck(),
            Class::HbBallot { h, b } => p.is_hb_ballot(h, b),
        }
    }
}

struct Search<'a, F> {
    class: Class,
    n: usize,
    filter: Option<&'a Pattern>,
    word: Vec<u32>,
    used: Vec<bool>,
    visit: F,
}

impl<F: FnMut(&[u32])> Search<'_, F> {
    /// Appends `v` if the extended prefix can still lead to a class member.
    /// `height` is the height of the current last letter.
    fn admissible(&self, v: u32, height: i64) -> Option<i64> {
        let i = self.word.len();
        let mut h = height;
        if let Some(start) = self.class.start_height() {
            if i == 0 {
                h = start;
            } else {
                h += if self.word[i - 1] < v { 1 } else { -1 };
            }
            if h < 0 {
                return None;
            }
            if let Some(end) = self.class.end_height() {
                let remaining = (self.n - i - 1) as i64;
                if (h - end).abs() > remaining {
                    return None;
                }
            }
        }
        if self.class == Class::OddOrder && closes_even_cycle(&self.word, i as u32 + 1, v) {
            return None;
        }
        Some(h)
    }

    fn run(&mut self, height: i64) {
        if self.n == 0 {
            if self.class.contains(&Permutation::identity(0)) {
                (self.visit)(&self.word);
            }
            return;
        }
        if self.word.len() == self.n {
            (self.visit)(&self.word);
            return;
        }
        for v in 1..=self.n as u32 {
            if self.used[v as usize] {
                continue;
            }
            let Some(h) = self.admissible(v, height) else { continue };
            self.word.push(v);
            if self.filter.is_some_and(|p| p.completes_occurrence(&self.word)) {
                self.word.pop();
                continue;
            }
            self.used[v as usize] = true;
            self.run(h);
            self.used[v as usize] = false;
            self.word.pop();
        }
    }
}

/// Setting `π(pos) = v` closes a cycle through `pos` of even length.
fn closes_even_cycle(word: &[u32], pos: u32, v: u32) -> bool {
    let mut x = v;
    let mut len = 1;
    while x != pos {
        if x as usize > word.len() {
            return false;
        }
        x = word[x as usize - 1];
        len += 1;
    }
    len % 2 == 0
}

/// Calls `visit` on every member of `class` of length `n` (optionally
/// avoiding `filter`) in lexicographic order of one-line words.
pub fn visit_class(class: Class, n: usize, filter: Option<&Pattern>, visit: impl FnMut(&[u32])) {
    let mut s = Search { class, n, filter, word: Vec::with_capacity(n), used: vec![false; n + 1], visit };
    s.run(0);
}

pub fn enumerate_class(class: Class, n: usize, filter: Option<&Pattern>) -> Vec<Permutation> {
    let mut out = Vec::new();
    visit_class(class, n, filter, |w| out.push(Permutation::from_word_unchecked(w.to_vec())));
    out
}

/// Parallel fold over the class, partitioned by first letter.
pub fn par_fold_class<T, I, F, R>(
    class: Class,
    n: usize,
    filter: Option<&Pattern>,
    identity: I,
    fold: F,
    reduce: R,
) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(&mut T, &[u32]) + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    if n == 0 {
        let mut acc = identity();
        visit_class(class, 0, filter, |w| fold(&mut acc, w));
        return acc;
    }
    (1..=n as u32)
        .into_par_iter()
        .map(|first| {
            let mut acc = identity();
            let mut s = Search {
                class,
                n,
                filter,
                word: Vec::with_capacity(n),
                used: vec![false; n + 1],
                visit: |w: &[u32]| fold(&mut acc, w),
            };
            if let Some(h) = s.admissible(first, 0) {
                s.word.push(first);
                if !filter.is_some_and(|p| p.completes_occurrence(&s.word)) {
                    s.used[first as usize] = true;
                    s.run(h);
                }
            }
            acc
        })
        .reduce(&identity, &reduce)
}

pub fn count_class(class: Class, n: usize, filter: Option<&Pattern>) -> u64 {
    par_fold_class(class, n, filter, || 0u64, |c, _| *c += 1, |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn words(ps: &[Permutation]) -> Vec<String> {
        ps.iter().map(|p| p.word().iter().map(u32::to_string).collect()).collect()
    }

    #[test]
    fn ballot_four() {
        let b4 = enumerate_class(Class::Ballot, 4, None);
        assert_eq!(words(&b4), ["1234", "1243", "1324", "1342", "1423", "2314", "2341", "2413", "3412"]);
    }

    #[test]
    fn odd_order_four() {
        let o4 = enumerate_class(Class::OddOrder, 4, None);
        let mut got: Vec<String> = o4.iter().map(|p| p.cycles().to_string()).collect();
        got.sort();
        let mut want: Vec<String> = [
            "(1)(2)(3)(4)",
            "(1)(2 3 4)",
            "(1)(2 4 3)",
            "(1 3 4)(2)",
            "(1 4 3)(2)",
            "(1 2 4)(3)",
            "(1 4 2)(3)",
            "(1 2 3)(4)",
            "(1 3 2)(4)",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn ballot_counts() {
        let want = [1u64, 1, 1, 3, 9, 45, 225, 1575, 11025];
        for (n, &w) in want.iter().enumerate() {
            assert_eq!(count_class(Class::Ballot, n, None), w, "ballot n={n}");
            assert_eq!(count_class(Class::OddOrder, n, None), w, "odd n={n}");
        }
    }

    #[test]
    fn enumeration_matches_filtering_all() {
        for n in 0..=7 {
            let all = enumerate_class(Class::All, n, None);
            assert!(all.windows(2).all(|w| w[0] < w[1]), "lexicographic");
            for class in [
                Class::Ballot,
                Class::OddOrder,
                Class::Dyck,
                Class::HbBallot { h: 1, b: 2 },
                Class::HbBallot { h: 2, b: 0 },
            ] {
                let want: Vec<_> = all.iter().filter(|p| class.contains(p)).cloned().collect();
                assert_eq!(enumerate_class(class, n, None), want, "{class:?} n={n}");
                assert_eq!(count_class(class, n, None), want.len() as u64);
            }
        }
    }

    #[test]
    fn pattern_filter_prunes_consistently() {
        let pat: Pattern = "2 1 3".parse().unwrap();
        for n in 0..=7 {
            let want = enumerate_class(Class::Ballot, n, None).into_iter().filter(|p| !pat.is_contained_in(p.word())).count();
            assert_eq!(count_class(Class::Ballot, n, Some(&pat)), want as u64);
        }
    }

    #[test]
    fn small_sizes() {
        assert_eq!(enumerate_class(Class::Ballot, 0, None), vec![Permutation::identity(0)]);
        assert_eq!(enumerate_class(Class::Dyck, 1, None), vec![Permutation::identity(1)]);
        assert_eq!(count_class(Class::Dyck, 0, None), 1);
        assert_eq!(count_class(Class::Dyck, 2, None), 0);
    }
}
