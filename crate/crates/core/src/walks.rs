//! Quarter-plane walks: Gessel steps `↑ ↓ ↗ ↙` in `ℕ²` and
//! Gouyou-Beauchamps steps `↑ ↓ ← →` in `{0 <= y <= x}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::recurrence::Rule;

pub use crate::recurrence::CountTable;

/// Largest step count accepted by [`Method::Brute`].
pub const BRUTE_GUARD: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WalkKind {
    Gessel,
    Gb,
}

impl WalkKind {
    pub fn steps(self) -> [(i64, i64); 4] {
        match self {
            WalkKind::Gessel => [(0, 1), (0, -1), (1, 1), (-1, -1)],
            WalkKind::Gb => [(0, 1), (0, -1), (-1, 0), (1, 0)],
        }
    }

    pub fn admits(self, (x, y): (i64, i64)) -> bool {
        match self {
            WalkKind::Gessel => x >= 0 && y >= 0,
            WalkKind::Gb => y >= 0 && y <= x,
        }
    }

    /// Start and end point of the walks counted by the recurrence table
    /// entry `(h, b)`: the y-axis for Gessel, the x-axis for GB.
    pub fn axis_point(self, h: usize) -> (i64, i64) {
        match self {
            WalkKind::Gessel => (0, h as i64),
            WalkKind::Gb => (h as i64, 0),
        }
    }

    fn axis_index(self, (x, y): (i64, i64)) -> Option<usize> {
        match self {
            WalkKind::Gessel if x == 0 && y >= 0 => Some(y as usize),
            WalkKind::Gb if y == 0 && x >= 0 => Some(x as usize),
            _ => None,
        }
    }

    /// Exact table `F_n(h, b)` (Gessel) or `H_n(h, b)` (GB) computed by the
    /// first-passage recurrence, for `n <= n_max` and `h <= h_max`.
    pub fn recurrence_table(self, n_max: usize, h_max: usize) -> CountTable {
        let rule = match self {
            WalkKind::Gessel => Rule::Gessel,
            WalkKind::Gb => Rule::Gb,
        };
        CountTable::build(rule, n_max, h_max)
    }
}

impl fmt::Display for WalkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WalkKind::Gessel => "gessel",
            WalkKind::Gb => "gb",
        })
    }
}

impl FromStr for WalkKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gessel" => Ok(WalkKind::Gessel),
            "gb" => Ok(WalkKind::Gb),
            _ => Err(Error::Parse(format!("unknown walk kind {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    StepDp,
    Recurrence,
    Brute,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::StepDp => "step_dp",
            Method::Recurrence => "recurrence",
            Method::Brute => "brute",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "step_dp" | "step-dp" | "dp" => Ok(Method::StepDp),
            "recurrence" => Ok(Method::Recurrence),
            "brute" => Ok(Method::Brute),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

/// Number of `n`-step walks of the given kind from `start` to `end`.
pub fn count_walks(kind: WalkKind, n: usize, start: (i64, i64), end: (i64, i64), method: Method) -> Result<BigUint> {
    for p in [start, end] {
        if p.0 < 0 || p.1 < 0 {
            return Err(Error::Range(format!("negative coordinate {p:?}")));
        }
    }
    if !kind.admits(start) || !kind.admits(end) {
        return Ok(BigUint::zero());
    }
    match method {
        Method::StepDp => Ok(step_dp(kind, n, start, end)),
        Method::Brute => brute(kind, n, start, end).map(BigUint::from),
        Method::Recurrence => {
            let (Some(h), Some(b)) = (kind.axis_index(start), kind.axis_index(end)) else {
                return Err(Error::Range(format!("the {kind} recurrence needs both endpoints on its axis")));
            };
            let table = kind.recurrence_table(n, h);
            Ok(table.get(n, h, b).cloned().unwrap_or_default())
        }
    }
}

/// Sum of walk counts from `start` over all end points on the kind's axis.
pub fn count_walks_to_axis(kind: WalkKind, n: usize, start: (i64, i64), method: Method) -> Result<BigUint> {
    let reach = (start.0.max(start.1) as usize) + n;
    let mut total = BigUint::zero();
    for j in 0..=reach {
        total += count_walks(kind, n, start, kind.axis_point(j), method)?;
    }
    Ok(total)
}

fn step_dp(kind: WalkKind, n: usize, start: (i64, i64), end: (i64, i64)) -> BigUint {
    let side = (start.0.max(start.1) as usize) + n + 1;
    let idx = |x: i64, y: i64| x as usize * side + y as usize;
    let mut cur = vec![BigUint::zero(); side * side];
    cur[idx(start.0, start.1)] = BigUint::one();
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); side * side];
        for x in 0..side as i64 {
            for y in 0..side as i64 {
                let v = &cur[idx(x, y)];
                if v.is_zero() {
                    continue;
                }
                for (dx, dy) in kind.steps() {
                    let (nx, ny) = (x + dx, y + dy);
                    if kind.admits((nx, ny)) && (nx as usize) < side && (ny as usize) < side {
                        next[idx(nx, ny)] += v;
                    }
                }
            }
        }
        cur = next;
    }
    if end.0 as usize >= side || end.1 as usize >= side {
        return BigUint::zero();
    }
    cur[idx(end.0, end.1)].clone()
}

fn brute(kind: WalkKind, n: usize, start: (i64, i64), end: (i64, i64)) -> Result<u64> {
    if n > BRUTE_GUARD {
        return Err(Error::Guard { what: "brute-force walk enumeration", n, guard: BRUTE_GUARD });
    }
    fn go(kind: WalkKind, left: usize, p: (i64, i64), end: (i64, i64)) -> u64 {
        let dist = (p.0 - end.0).unsigned_abs().max((p.1 - end.1).unsigned_abs()) as usize;
        if dist > left {
            return 0;
        }
        if left == 0 {
            return 1;
        }
        kind.steps()
            .iter()
            .map(|&(dx, dy)| (p.0 + dx, p.1 + dy))
            .filter(|&q| kind.admits(q))
            .map(|q| go(kind, left - 1, q, end))
            .sum()
    }
    Ok(go(kind, n, start, end))
}

/// Brute-force tally of the end points of every `n`-step walk from `start`.
pub fn brute_endpoints(kind: WalkKind, n: usize, start: (i64, i64)) -> Result<BTreeMap<(i64, i64), u64>> {
    if n > BRUTE_GUARD {
        return Err(Error::Guard { what: "brute-force walk enumeration", n, guard: BRUTE_GUARD });
    }
    if start.0 < 0 || start.1 < 0 || !kind.admits(start) {
        return Err(Error::Range(format!("start {start:?} is outside the region")));
    }
    fn go(kind: WalkKind, left: usize, p: (i64, i64), tally: &mut BTreeMap<(i64, i64), u64>) {
        if left == 0 {
            *tally.entry(p).or_default() += 1;
            return;
        }
        for (dx, dy) in kind.steps() {
            let q = (p.0 + dx, p.1 + dy);
            if kind.admits(q) {
                go(kind, left - 1, q, tally);
            }
        }
    }
    let mut tally = BTreeMap::new();
    go(kind, n, start, &mut tally);
    Ok(tally)
}

fn rising(a: &BigRational, n: usize) -> BigRational {
    let mut acc = BigRational::one();
    let mut x = a.clone();
    for _ in 0..n {
        acc *= &x;
        x += BigRational::one();
    }
    acc
}

/// `16^n (5/6)_n (1/2)_n / ((5/3)_n (2)_n)` evaluated exactly.
pub fn gessel_closed_form(n: usize) -> BigRational {
    let q = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    let sixteen = BigRational::from_integer(BigInt::from(16).pow(n as u32));
    sixteen * rising(&q(5, 6), n) * rising(&q(1, 2), n) / (rising(&q(5, 3), n) * rising(&q(2, 1), n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn closed_form_start() {
        let want = [1u64, 2, 11, 85, 782];
        for (n, &w) in want.iter().enumerate() {
            let g = gessel_closed_form(n);
            assert!(g.is_integer());
            assert_eq!(g.to_integer(), BigInt::from(w));
        }
    }

    #[test]
    fn two_step_gessel() {
        for m in [Method::StepDp, Method::Recurrence, Method::Brute] {
            assert_eq!(count_walks(WalkKind::Gessel, 2, (0, 0), (0, 0), m).unwrap(), big(2));
            assert_eq!(count_walks(WalkKind::Gessel, 0, (0, 0), (0, 0), m).unwrap(), big(1));
            assert_eq!(count_walks(WalkKind::Gessel, 0, (0, 0), (0, 1), m).unwrap(), big(0));
            assert_eq!(count_walks_to_axis(WalkKind::Gessel, 2, (0, 0), m).unwrap(), big(3));
        }
    }

    #[test]
    fn gb_diagonal_constraint() {
        assert_eq!(count_walks(WalkKind::Gb, 1, (0, 0), (0, 1), Method::StepDp).unwrap(), big(0));
        assert_eq!(count_walks(WalkKind::Gb, 2, (0, 0), (1, 1), Method::Brute).unwrap(), big(1));
    }

    #[test]
    fn errors() {
        assert!(count_walks(WalkKind::Gessel, 15, (0, 0), (0, 0), Method::Brute).is_err());
        assert!(count_walks(WalkKind::Gessel, 2, (1, 0), (0, 0), Method::Recurrence).is_err());
        assert!(count_walks(WalkKind::Gessel, 2, (-1, 0), (0, 0), Method::StepDp).is_err());
    }
}
