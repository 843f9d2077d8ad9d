//! Counting formulas for cluster objects and brute-force enumerations used
//! to check them.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{Cluster, ClusterPerm, Ocp};
use crate::error::{Error, Result};
use crate::perm::{enumerate_class, Class};

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `n!!`, with `0!! = (-1)!! = 1`.
pub fn double_factorial(n: i64) -> BigUint {
    assert!(n >= -1, "double factorial of {n}");
    let mut acc = BigUint::one();
    let mut i = n;
    while i > 1 {
        acc *= i as u64;
        i -= 2;
    }
    acc
}

/// Number of single odd cluster-cycles on `[n]` with `2k + 1` clusters:
/// `C(n, 2k+1) (n-1)!`.
pub fn count_cluster_cycles(n: u64, k: u64) -> Result<BigUint> {
    if n == 0 || 2 * k + 1 > n {
        return Err(Error::Range(format!("need n >= 1 and 2k+1 <= n, got n={n}, k={k}")));
    }
    Ok(binomial(n, 2 * k + 1) * factorial(n - 1))
}

/// Number of well-labelled positive paths of size `n` with `k` horizontal
/// steps.
pub fn count_wlpp_horizontal(n: u64, k: u64) -> Result<BigUint> {
    if n == 0 || k >= n {
        return Err(Error::Range(format!("need 0 <= k <= n-1, got n={n}, k={k}")));
    }
    let base = binomial(n, k) * binomial(n - 1, k) * factorial(k);
    let m = (n - k) as i64;
    Ok(if m % 2 == 0 {
        let d = double_factorial(m - 1);
        base * &d * &d
    } else {
        base * double_factorial(m) * double_factorial(m - 2)
    })
}

/// Every cluster-permutation of `[n]` that is a well-labelled positive path:
/// each permutation with each choice of flat links, filtered.
pub fn wlpp_all(n: usize) -> Vec<ClusterPerm> {
    let mut out = Vec::new();
    for p in enumerate_class(Class::All, n, None) {
        let links = n.saturating_sub(1);
        for mask in 0u32..(1 << links) {
            let flat: Vec<bool> = (0..links).map(|i| mask >> i & 1 == 1).collect();
            let cp = ClusterPerm::from_chain(p.word(), &flat);
            if cp.is_wlpp() {
                out.push(cp);
            }
        }
    }
    out
}

/// `counts[k]` = number of well-labelled positive paths of size `n` with `k`
/// clusters.
pub fn wlpp_count_by_order(n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    for cp in wlpp_all(n) {
        counts[cp.order()] += 1;
    }
    counts
}

fn ordered_partitions(items: &[u32], cur: &mut Vec<Vec<u32>>, visit: &mut impl FnMut(&[Vec<u32>])) {
    if items.is_empty() {
        visit(cur);
        return;
    }
    let n = items.len();
    for mask in 1u32..(1 << n) {
        let block: Vec<u32> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| items[i]).collect();
        let rest: Vec<u32> = (0..n).filter(|&i| mask >> i & 1 == 0).map(|i| items[i]).collect();
        cur.push(block);
        ordered_partitions(&rest, cur, visit);
        cur.pop();
    }
}

fn arrangements(block: &[u32]) -> Vec<Vec<u32>> {
    enumerate_class(Class::All, block.len(), None)
        .into_iter()
        .map(|p| p.word().iter().map(|&i| block[i as usize - 1]).collect())
        .collect()
}

/// Every cluster-cycle with an odd number of clusters whose letters are
/// exactly `support`, found as all sequences of ordered clusters up to
/// rotation.
pub fn single_cluster_cycles(support: &[u32]) -> Vec<Vec<Cluster>> {
    let mut seen = BTreeSet::new();
    ordered_partitions(support, &mut Vec::new(), &mut |blocks| {
        if blocks.len() % 2 == 0 {
            return;
        }
        let mut seqs: Vec<Vec<Cluster>> = vec![Vec::new()];
        for b in blocks {
            let opts = arrangements(b);
            seqs = seqs
                .into_iter()
                .flat_map(|s| {
                    opts.iter().map(move |o| {
                        let mut s = s.clone();
                        s.push(Cluster { letters: o.clone() });
                        s
                    })
                })
                .collect();
        }
        for mut s in seqs {
            super::rotate_cycle(&mut s);
            seen.insert(s);
        }
    });
    seen.into_iter().collect()
}

fn set_partitions(items: &[u32], cur: &mut Vec<Vec<u32>>, visit: &mut impl FnMut(&[Vec<u32>])) {
    let Some((&first, rest)) = items.split_first() else {
        visit(cur);
        return;
    };
    let n = rest.len();
    for mask in 0u32..(1 << n) {
        let mut block = vec![first];
        block.extend((0..n).filter(|&i| mask >> i & 1 == 1).map(|i| rest[i]));
        let others: Vec<u32> = (0..n).filter(|&i| mask >> i & 1 == 0).map(|i| rest[i]).collect();
        cur.push(block);
        set_partitions(&others, cur, visit);
        cur.pop();
    }
}

/// Every odd order cluster-permutation of `[n]`.
pub fn ocp_all(n: usize) -> Vec<Ocp> {
    let letters: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::new();
    set_partitions(&letters, &mut Vec::new(), &mut |blocks| {
        let choices: Vec<Vec<Vec<Cluster>>> = blocks.iter().map(|b| single_cluster_cycles(b)).collect();
        let mut acc: Vec<Vec<Vec<Cluster>>> = vec![Vec::new()];
        for opts in &choices {
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    opts.iter().map(move |c| {
                        let mut p = prefix.clone();
                        p.push(c.clone());
                        p
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(|cs| Ocp::new(cs).expect("disjoint odd cycles")));
    });
    out.sort();
    out
}

pub fn ocp_count_by_order(n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    for o in ocp_all(n) {
        counts[o.order()] += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_factorial_convention() {
        assert_eq!(double_factorial(-1), BigUint::one());
        assert_eq!(double_factorial(0), BigUint::one());
        assert_eq!(double_factorial(5), BigUint::from(15u32));
        assert_eq!(double_factorial(6), BigUint::from(48u32));
    }

    #[test]
    fn formulas() {
        assert_eq!(count_cluster_cycles(1, 0).unwrap(), BigUint::one());
        assert_eq!(count_cluster_cycles(3, 1).unwrap(), BigUint::from(2u32));
        assert!(count_cluster_cycles(3, 2).is_err());
        assert_eq!(count_wlpp_horizontal(1, 0).unwrap(), BigUint::one());
        assert_eq!(count_wlpp_horizontal(3, 2).unwrap(), BigUint::from(6u32));
        assert!(count_wlpp_horizontal(3, 3).is_err());
        let total: BigUint = (0..3).map(|k| count_wlpp_horizontal(3, k).unwrap()).sum();
        assert_eq!(total, BigUint::from(15u32));
    }

    #[test]
    fn single_cycles_match_formula() {
        for n in 1..=5u32 {
            let support: Vec<u32> = (1..=n).collect();
            let cycles = single_cluster_cycles(&support);
            for k in 0..=(n as u64 - 1) / 2 {
                let got = cycles.iter().filter(|c| c.len() as u64 == 2 * k + 1).count();
                assert_eq!(BigUint::from(got), count_cluster_cycles(n as u64, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn small_totals() {
        assert_eq!(wlpp_all(3).len(), 15);
        assert_eq!(ocp_all(3).len(), 15);
        assert_eq!(wlpp_count_by_order(3), ocp_count_by_order(3));
    }
}
