//! Cluster-permutations (well-labelled positive paths), odd order
//! cluster-permutations and the bijection between them extending
//! [`crate::dyck::psi_map`].
//!
//! A cluster is a nonempty word of distinct letters. In a cluster-permutation
//! consecutive letters of one cluster are joined by a flat step; between
//! clusters the step goes up or down with the letters. Clusters of size at
//! least two are written in brackets: `2 [10 15] 19 12`.

mod counting;
mod series;

use std::fmt;
use std::str::FromStr;

use crate::boxperm::{psi, psi_inv, BoxCycle, BoxWord, CyclicBoxPerm};
use crate::dyck::{cycle_chain_factors, insert_cycle_chain, insert_linear_chain, linear_chain_factors};
use crate::error::{Error, Result};
use crate::perm::cycles::split_groups;
use crate::perm::Permutation;

pub use counting::{
    binomial, count_cluster_cycles, count_wlpp_horizontal, double_factorial, factorial, ocp_all, ocp_count_by_order,
    single_cluster_cycles, wlpp_all, wlpp_count_by_order,
};
pub use series::{series_coefficients, RationalSeries, SeriesKind};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cluster {
    letters: Vec<u32>,
}

impl Cluster {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Parse("empty cluster".into()));
        }
        Ok(Cluster { letters })
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reversed(&self) -> Cluster {
        Cluster { letters: self.letters.iter().rev().copied().collect() }
    }
}

impl fmt::Display for Cluster {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.len() == 1 {
            return write!(f, "{}", self.letters[0]);
        }
        f.write_str("[")?;
        for (i, x) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

/// Parses a sequence of clusters such as `2 [10 15], 19`.
fn parse_clusters(text: &str) -> Result<Vec<Cluster>> {
    let mut out = Vec::new();
    let mut rest = text;
    loop {
        rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
        if rest.is_empty() {
            return Ok(out);
        }
        if let Some(r) = rest.strip_prefix('[') {
            let end = r.find(']').ok_or_else(|| Error::Parse(format!("unclosed cluster in {text:?}")))?;
            out.push(Cluster::new(crate::perm::parse_letters(&r[..end])?)?);
            rest = &r[end + 1..];
        } else {
            let end = rest.find(|c: char| c.is_whitespace() || c == ',' || c == '[').unwrap_or(rest.len());
            let tok = &rest[..end];
            let x = tok.parse::<u32>().map_err(|_| Error::Parse(format!("bad letter {tok:?}")))?;
            out.push(Cluster::new(vec![x])?);
            rest = &rest[end..];
        }
    }
}

fn check_letters(clusters: &[&Cluster]) -> Result<usize> {
    let letters: Vec<u32> = clusters.iter().flat_map(|c| c.letters.iter().copied()).collect();
    Permutation::new(letters.clone())?;
    Ok(letters.len())
}

/// Letters and flat flags (one per link) of a sequence of clusters.
fn chain(clusters: &[Cluster]) -> (Vec<u32>, Vec<bool>) {
    let mut letters = Vec::new();
    let mut flat = Vec::new();
    for c in clusters {
        for (i, &x) in c.letters.iter().enumerate() {
            if !letters.is_empty() {
                flat.push(i > 0);
            }
            letters.push(x);
        }
    }
    (letters, flat)
}

/// Cuts a chain into clusters at its non-flat links.
fn clusters_of(letters: &[u32], flat: &[bool]) -> Vec<Cluster> {
    let mut out: Vec<Cluster> = Vec::new();
    for (i, &x) in letters.iter().enumerate() {
        if i > 0 && flat[i - 1] {
            out.last_mut().unwrap().letters.push(x);
        } else {
            out.push(Cluster { letters: vec![x] });
        }
    }
    out
}

/// A permutation of `[n]` whose letters are grouped into clusters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClusterPerm {
    clusters: Vec<Cluster>,
}

impl ClusterPerm {
    pub fn new(clusters: Vec<Cluster>) -> Result<Self> {
        check_letters(&clusters.iter().collect::<Vec<_>>())?;
        Ok(ClusterPerm { clusters })
    }

    pub(crate) fn from_chain(letters: &[u32], flat: &[bool]) -> Self {
        ClusterPerm { clusters: clusters_of(letters, flat) }
    }

    /// Every letter its own cluster.
    pub fn from_permutation(p: &Permutation) -> Self {
        ClusterPerm { clusters: p.word().iter().map(|&x| Cluster { letters: vec![x] }).collect() }
    }

    pub fn clusters(&self) -> &[Cluster] {
        &self.clusters
    }

    pub fn n(&self) -> usize {
        self.clusters.iter().map(Cluster::len).sum()
    }

    /// Number of clusters.
    pub fn order(&self) -> usize {
        self.clusters.len()
    }

    pub fn horizontal_steps(&self) -> usize {
        self.n() - self.order()
    }

    pub fn word(&self) -> Vec<u32> {
        chain(&self.clusters).0
    }

    /// Heights of the letters along the up/flat/down path, starting at 0.
    pub fn heights(&self) -> Vec<i64> {
        let (letters, flat) = chain(&self.clusters);
        let mut h = vec![0i64; letters.len()];
        for i in 1..letters.len() {
            h[i] = h[i - 1] + crate::dyck::step_value(letters[i - 1], letters[i], flat[i - 1]);
        }
        h
    }

    /// Whether the path never goes below height 0, i.e. the
    /// cluster-permutation is a well-labelled positive path.
    pub fn is_wlpp(&self) -> bool {
        self.heights().iter().all(|&h| h >= 0)
    }

    /// The plain permutation, when every cluster is a single letter.
    pub fn as_permutation(&self) -> Option<Permutation> {
        self.clusters.iter().all(|c| c.len() == 1).then(|| Permutation::new(self.word()).unwrap())
    }
}

impl fmt::Display for ClusterPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.clusters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for ClusterPerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClusterPerm::new(parse_clusters(s)?)
    }
}

/// An odd order cluster-permutation: cycles of clusters, each with an odd
/// number of clusters. Each cycle is rotated to start with the cluster
/// holding its smallest letter; cycles are sorted by that letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Ocp {
    cycles: Vec<Vec<Cluster>>,
}

fn cycle_min(c: &[Cluster]) -> u32 {
    c.iter().flat_map(|x| x.letters.iter().copied()).min().unwrap()
}

pub(crate) fn rotate_cycle(c: &mut [Cluster]) {
    let m = cycle_min(c);
    let at = c.iter().position(|x| x.letters.contains(&m)).unwrap();
    c.rotate_left(at);
}

impl Ocp {
    pub fn new(mut cycles: Vec<Vec<Cluster>>) -> Result<Self> {
        let all: Vec<&Cluster> = cycles.iter().flatten().collect();
        check_letters(&all)?;
        for c in &mut cycles {
            if c.len() % 2 == 0 {
                return Err(Error::EvenCycle(c.len()));
            }
            rotate_cycle(c);
        }
        cycles.sort_by_key(|c| cycle_min(c));
        Ok(Ocp { cycles })
    }

    pub fn cycles(&self) -> &[Vec<Cluster>] {
        &self.cycles
    }

    pub fn n(&self) -> usize {
        self.cycles.iter().flatten().map(Cluster::len).sum()
    }

    /// Total number of clusters.
    pub fn order(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    pub fn clusters(&self) -> impl Iterator<Item = &Cluster> {
        self.cycles.iter().flatten()
    }
}

impl fmt::Display for Ocp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for Ocp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cycles = split_groups(s, '(', ')')?.into_iter().map(parse_clusters).collect::<Result<Vec<_>>>()?;
        Ocp::new(cycles)
    }
}

/// Letters and flat flags of a cluster-cycle; the last flag closes the cycle
/// and is never flat.
fn cycle_chain(c: &[Cluster]) -> (Vec<u32>, Vec<bool>) {
    let (letters, mut flat) = chain(c);
    flat.push(false);
    (letters, flat)
}

/// Extends the ballot-to-odd-order bijection: cut out the maximal Motzkin
/// factors, map the box-permutation skeleton, put the factors back.
pub fn phi_map(cp: &ClusterPerm) -> Result<Ocp> {
    if !cp.is_wlpp() {
        return Err(Error::WrongClass(format!("{cp} is not a well-labelled positive path")));
    }
    let (letters, flat) = chain(&cp.clusters);
    let (factors, skeleton) = linear_chain_factors(&letters, &flat)?;
    let image = psi(&BoxWord::new(skeleton)?);
    let cycles: Vec<_> = image.cycles().iter().map(|c| c.letters()).collect();
    let filled = insert_cycle_chain(&cycles, &factors)?;
    let mut out = Vec::with_capacity(filled.len());
    for (letters, links) in filled {
        // Start right after a cluster boundary so no cluster wraps around.
        let cut = links.iter().rposition(|&f| !f).expect("a cycle has a cluster boundary");
        let k = letters.len();
        let start = (cut + 1) % k;
        let rl: Vec<u32> = (0..k).map(|i| letters[(start + i) % k]).collect();
        let rf: Vec<bool> = (0..k - 1).map(|i| links[(start + i) % k]).collect();
        out.push(clusters_of(&rl, &rf));
    }
    Ocp::new(out)
}

pub fn phi_map_inv(o: &Ocp) -> Result<ClusterPerm> {
    let mut factors = Vec::new();
    let mut skel = Vec::new();
    for (i, c) in o.cycles.iter().enumerate() {
        let (letters, flat) = cycle_chain(c);
        let (f, s) = cycle_chain_factors(i, &letters, &flat)?;
        factors.extend(f);
        skel.push(BoxCycle::new(s)?);
    }
    let word = psi_inv(&CyclicBoxPerm::new(skel)?)?;
    let (letters, links) = insert_linear_chain(word.letters(), &factors)?;
    Ok(ClusterPerm::from_chain(&letters, &links))
}
