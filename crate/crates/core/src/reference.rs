//! Reference sequences embedded as data, and the closed forms they satisfy.
//!
//! Every published row below is reproduced by the test suites through
//! brute-force enumeration; none of it is fetched at run time.

use num_bigint::BigUint;
use num_traits::One;

use crate::clusters::binomial;
use crate::patterns::Pattern;

/// A named integer sequence starting at index `offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sequence {
    pub id: &'static str,
    pub description: &'static str,
    pub offset: usize,
    pub values: &'static [u64],
}

impl Sequence {
    /// Value at index `n`, if it is tabulated.
    pub fn get(&self, n: usize) -> Option<u64> {
        n.checked_sub(self.offset).and_then(|i| self.values.get(i).copied())
    }

    /// Largest tabulated index.
    pub fn max_n(&self) -> usize {
        self.offset + self.values.len() - 1
    }

    /// The length-3 pattern of a `ballotXYZ` sequence.
    pub fn pattern(&self) -> Option<Pattern> {
        self.id.strip_prefix("ballot").filter(|s| s.len() == 3)?.parse().ok()
    }
}

/// Ballot permutations, `b_0..b_9` (A000246).
pub const BALLOT: Sequence = Sequence {
    id: "ballot",
    description: "ballot permutations of length n",
    offset: 0,
    values: &[1, 1, 1, 3, 9, 45, 225, 1575, 11025, 99225],
};

/// Ballot permutations avoiding each pattern of length 3, from `n = 1`.
pub const AVOIDERS: [Sequence; 6] = [
    // A208355; the terms at n = 9, 10 are C(5) = 42.
    Sequence {
        id: "ballot123",
        description: "123-avoiding ballot permutations",
        offset: 1,
        values: &[1, 1, 2, 2, 5, 5, 14, 14, 42, 42],
    },
    // A071724
    Sequence {
        id: "ballot321",
        description: "321-avoiding ballot permutations",
        offset: 1,
        values: &[1, 1, 3, 9, 28, 90, 297, 1001, 3432],
    },
    // A005817
    Sequence {
        id: "ballot132",
        description: "132-avoiding ballot permutations",
        offset: 1,
        values: &[1, 1, 2, 4, 10, 25, 70, 196, 588, 1764],
    },
    // A005817
    Sequence {
        id: "ballot231",
        description: "231-avoiding ballot permutations",
        offset: 1,
        values: &[1, 1, 2, 4, 10, 25, 70, 196, 588, 1764],
    },
    // A151396
    Sequence {
        id: "ballot213",
        description: "213-avoiding ballot permutations",
        offset: 1,
        values: &[1, 1, 3, 6, 21, 52, 193, 532, 2034],
    },
    // A151396
    Sequence {
        id: "ballot312",
        description: "312-avoiding ballot permutations",
        offset: 1,
        values: &[1, 1, 3, 6, 21, 52, 193, 532, 2034],
    },
];

pub fn sequences() -> impl Iterator<Item = &'static Sequence> {
    std::iter::once(&BALLOT).chain(AVOIDERS.iter())
}

pub fn lookup(id: &str) -> Option<&'static Sequence> {
    sequences().find(|s| s.id == id)
}

pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// `C(⌈n/2⌉)`, the number of 123-avoiding ballot permutations.
pub fn ballot123_closed(n: u64) -> BigUint {
    catalan(n.div_ceil(2))
}

/// `3/(n+1) C(2n-2, n-2)` for `n >= 2`, the number of 321-avoiding ballot
/// permutations.
pub fn ballot321_closed(n: u64) -> BigUint {
    if n < 2 {
        return BigUint::one();
    }
    binomial(2 * n - 2, n - 2) * 3u32 / (n + 1)
}

/// `C(⌊n/2⌋) C(⌊(n+1)/2⌋)`, the number of 132- (and 231-) avoiding ballot
/// permutations.
pub fn ballot132_closed(n: u64) -> BigUint {
    catalan(n / 2) * catalan(n.div_ceil(2))
}

/// `C(⌊(n+1)/2⌋) C(⌊(n+2)/2⌋)`, the number of `n`-step Gouyou-Beauchamps
/// walks from the origin ending on the x-axis.
pub fn gb_axis_closed(n: u64) -> BigUint {
    catalan(n.div_ceil(2)) * catalan(n / 2 + 1)
}

/// Closed form for the `ballotXYZ` sequences that have one.
pub fn closed_form(id: &str, n: u64) -> Option<BigUint> {
    match id {
        "ballot123" => Some(ballot123_closed(n)),
        "ballot321" => Some(ballot321_closed(n)),
        "ballot132" | "ballot231" => Some(ballot132_closed(n)),
        _ => None,
    }
}
