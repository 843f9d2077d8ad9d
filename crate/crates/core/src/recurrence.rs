//! Bottom-up evaluation of the first-passage recurrences shared by the walk
//! counts and the pattern-avoiding ballot counts.
//!
//! Every table entry `T_m(h, b)` counts objects of size `m` going from
//! level `h` to level `b` with unit changes, so it vanishes once
//! `|h - b| > m`. Level `m` of a table built for `n <= N`, `h <= H` stores
//! `h <= H + N - m` and `b <= h_cap + m`; every lookup the recurrences make
//! outside that box is zero by the reachability bound.

use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Rule {
    /// `T_{n-1}(h+1,b) + T_{n-1}(h-1,b) + Σ T_i(h+1,a+1) T_{n-2-i}(a,b)`
    Gessel,
    /// `T_{n-1}(h+1,b) + T_{n-1}(h,b+1) + Σ T_i(h,a+1) T_{n-2-i}(a+1,b)`
    GesselAlt,
    /// `T_{n-1}(h+1,b) + T_{n-1}(h-1,b) + Σ T_i(h-1,a) T_{n-2-i}(a+1,b)`
    Gb,
}

/// Exact table of `T_m(h, b)` for `m <= n_max`.
#[derive(Debug, Clone)]
pub struct CountTable {
    n_max: usize,
    h_max: usize,
    levels: Vec<Level>,
    zero: BigUint,
}

#[derive(Debug, Clone)]
struct Level {
    h_cap: usize,
    b_cap: usize,
    data: Vec<BigUint>,
}

impl Level {
    fn get(&self, h: usize, b: usize) -> Option<&BigUint> {
        (h <= self.h_cap && b <= self.b_cap).then(|| &self.data[h * (self.b_cap + 1) + b])
    }
}

impl CountTable {
    pub(crate) fn build(rule: Rule, n_max: usize, h_max: usize) -> Self {
        let mut table = CountTable { n_max, h_max, levels: Vec::with_capacity(n_max + 1), zero: BigUint::zero() };
        for m in 0..=n_max {
            let h_cap = h_max + (n_max - m);
            let b_cap = h_cap + m;
            let mut data = Vec::with_capacity((h_cap + 1) * (b_cap + 1));
            for h in 0..=h_cap {
                for b in 0..=b_cap {
                    data.push(if m == 0 {
                        if h == b { BigUint::one() } else { BigUint::zero() }
                    } else {
                        table.step(rule, m, h, b)
                    });
                }
            }
            table.levels.push(Level { h_cap, b_cap, data });
        }
        table
    }

    fn at(&self, m: usize, h: usize, b: usize) -> &BigUint {
        self.levels[m].get(h, b).unwrap_or(&self.zero)
    }

    /// Sum over `a` of `left(i, a) * right(n - 2 - i, a)`, where the left
    /// factor has first argument `x` and second argument `a + shift`.
    fn convolve(
        &self,
        n: usize,
        x: usize,
        shift: usize,
        left: impl Fn(usize) -> (usize, usize),
        right: impl Fn(usize) -> (usize, usize),
    ) -> BigUint {
        let mut sum = BigUint::zero();
        for i in 0..=n - 2 {
            for a in 0..=(x + i).saturating_sub(shift) {
                let (lh, lb) = left(a);
                let l = self.at(i, lh, lb);
                if l.is_zero() {
                    continue;
                }
                let (rh, rb) = right(a);
                let r = self.at(n - 2 - i, rh, rb);
                if !r.is_zero() {
                    sum += l * r;
                }
            }
        }
        sum
    }

    fn step(&self, rule: Rule, n: usize, h: usize, b: usize) -> BigUint {
        let mut v = self.at(n - 1, h + 1, b).clone();
        match rule {
            Rule::Gessel | Rule::Gb if h > 0 => v += self.at(n - 1, h - 1, b),
            Rule::GesselAlt => v += self.at(n - 1, h, b + 1),
            _ => {}
        }
        if n >= 2 {
            v += match rule {
                Rule::Gessel => self.convolve(n, h + 1, 1, |a| (h + 1, a + 1), |a| (a, b)),
                Rule::GesselAlt => self.convolve(n, h, 1, |a| (h, a + 1), |a| (a + 1, b)),
                Rule::Gb if h > 0 => self.convolve(n, h - 1, 0, |a| (h - 1, a), |a| (a + 1, b)),
                Rule::Gb => BigUint::zero(),
            };
        }
        v
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn h_max(&self) -> usize {
        self.h_max
    }

    /// `T_n(h, b)`, or `None` when `(n, h)` lies outside the range the table
    /// was built for. Any `b` is answered exactly.
    pub fn get(&self, n: usize, h: usize, b: usize) -> Option<&BigUint> {
        let level = self.levels.get(n)?;
        if h > level.h_cap {
            return None;
        }
        Some(level.get(h, b).unwrap_or(&self.zero))
    }

    /// `Σ_b T_n(h, b)`.
    pub fn row_sum(&self, n: usize, h: usize) -> Option<BigUint> {
        let level = self.levels.get(n)?;
        if h > level.h_cap {
            return None;
        }
        Some((0..=level.b_cap).map(|b| level.get(h, b).unwrap()).sum())
    }
}
