//! Self-contained verification suites.
//!
//! Each suite recomputes a family of identities by two independent routes
//! (usually brute-force enumeration against a formula, recurrence or
//! bijection) and records one [`Check`] per comparison. Everything is exact
//! and deterministic for a given seed; only [`Report::elapsed`] varies
//! between runs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Display};
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::slice::ParallelSliceMut;
use serde::Serialize;

use crate::boxperm::{oracle, phi, phi_inv, psi, psi_inv, BoxClass};
use crate::clusters::{
    count_cluster_cycles, count_wlpp_horizontal, double_factorial, ocp_all, ocp_count_by_order, phi_map,
    phi_map_inv, series_coefficients, single_cluster_cycles, wlpp_all, wlpp_count_by_order, ClusterPerm,
    SeriesKind,
};
use crate::dyck::{psi_map, psi_map_inv};
use crate::error::{Error, Result};
use crate::patterns::{avoid_count, ballot_recurrence_table, contains, wilf_map, wilf_map_inv, BallotRecurrence, Pattern, WilfMap};
use crate::perm::{count_class, enumerate_class, par_fold_class, Class, CycleSystem, Permutation};
use crate::reference::{self, AVOIDERS, BALLOT};
use crate::walks::{brute_endpoints, count_walks, count_walks_to_axis, gessel_closed_form, Method, WalkKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    /// Descents over ballot permutations against `exc~` over odd order ones.
    Spiro,
    /// The same, refined by the (cyclic) neighbors of the largest letter.
    Wz,
    /// The main bijection: bijectivity, inverse, `des = exc~`, `PEAK = cPEAK`.
    MainThm,
    /// Ballot avoiders of each length-3 pattern.
    Table1,
    /// 213-avoiders against Gessel walks.
    Gessel213,
    /// 231-avoiders against Gouyou-Beauchamps walks.
    Gb231,
    /// Generating function coefficients against enumeration.
    Egf,
    /// The cluster extension and its counting formulas.
    Clusters,
    /// Seeded random round trips of every bijection.
    Roundtrip,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Spiro,
        Suite::Wz,
        Suite::MainThm,
        Suite::Table1,
        Suite::Gessel213,
        Suite::Gb231,
        Suite::Egf,
        Suite::Clusters,
        Suite::Roundtrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Spiro => "spiro",
            Suite::Wz => "wz",
            Suite::MainThm => "main_thm",
            Suite::Table1 => "table1",
            Suite::Gessel213 => "gessel213",
            Suite::Gb231 => "gb231",
            Suite::Egf => "egf",
            Suite::Clusters => "clusters",
            Suite::Roundtrip => "roundtrip",
            Suite::All => "all",
        }
    }

    /// Largest accepted `max_n`. Some suites cap their most expensive
    /// checks lower on their own: brute-force permutation filters for the
    /// walk suites stop at length 9, cluster enumeration at size 7 and the
    /// exhaustive cluster bijection at size 6.
    pub fn guard(self) -> usize {
        match self {
            Suite::Spiro | Suite::MainThm | Suite::Table1 => 10,
            Suite::Wz => 9,
            Suite::Gessel213 | Suite::Gb231 => 12,
            Suite::Egf | Suite::Clusters => 12,
            Suite::Roundtrip => 40,
            Suite::All => 9,
        }
    }
}

impl Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: String,
    pub check: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub suite: Suite,
    pub max_n: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// One JSON object per check.
    pub fn json_lines(&self) -> String {
        self.checks.iter().map(|c| serde_json::to_string(c).unwrap() + "\n").collect()
    }
}

struct Sink<'a> {
    suite: Suite,
    checks: &'a mut Vec<Check>,
}

impl Sink<'_> {
    fn eq<T: Display + PartialEq>(&mut self, check: impl Into<String>, expected: T, actual: T) {
        self.checks.push(Check {
            suite: self.suite.name().to_string(),
            check: check.into(),
            pass: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }
}

/// Run `suite` up to size `max_n`. For [`Suite::All`] every suite runs with
/// `max_n` clamped to its own guard.
pub fn verify_suite(suite: Suite, max_n: usize, seed: u64) -> Result<Report> {
    if max_n > suite.guard() {
        return Err(Error::Guard { what: "verification suite size", n: max_n, guard: suite.guard() });
    }
    let start = Instant::now();
    let mut checks = Vec::new();
    let each: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    for s in each {
        let mut sink = Sink { suite: s, checks: &mut checks };
        let m = max_n.min(s.guard());
        match s {
            Suite::Spiro => spiro(&mut sink, m),
            Suite::Wz => wz(&mut sink, m),
            Suite::MainThm => main_thm(&mut sink, m),
            Suite::Table1 => table1(&mut sink, m),
            Suite::Gessel213 => walk_suite(&mut sink, WalkKind::Gessel, m)?,
            Suite::Gb231 => walk_suite(&mut sink, WalkKind::Gb, m)?,
            Suite::Egf => egf(&mut sink, m),
            Suite::Clusters => clusters(&mut sink, m),
            Suite::Roundtrip => roundtrip(&mut sink, m, seed),
            Suite::All => unreachable!(),
        }
    }
    Ok(Report { suite, max_n, seed, checks, elapsed: start.elapsed() })
}

struct Poly(Vec<u64>);

impl Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "[{}]", terms.join(","))
    }
}

fn add_vecs(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn stat_poly(class: Class, n: usize, stat: impl Fn(&Permutation) -> usize + Sync + Send) -> Vec<u64> {
    par_fold_class(
        class,
        n,
        None,
        || vec![0u64; n.max(1)],
        |acc, w| acc[stat(&Permutation::from_word_unchecked(w.to_vec()))] += 1,
        add_vecs,
    )
}

fn spiro(s: &mut Sink, max_n: usize) {
    for n in 1..=max_n {
        let b = stat_poly(Class::Ballot, n, Permutation::des);
        let o = stat_poly(Class::OddOrder, n, Permutation::exc_tilde);
        s.eq(format!("n={n} des over ballot vs exc~ over odd order"), Poly(b).to_string(), Poly(o).to_string());
    }
}

type PairPolys = BTreeMap<(u32, u32), Vec<u64>>;

fn pair_polys(
    class: Class,
    n: usize,
    pair: impl Fn(&Permutation) -> Option<(u32, u32)> + Sync + Send,
    stat: impl Fn(&Permutation) -> usize + Sync + Send,
) -> PairPolys {
    par_fold_class(
        class,
        n,
        None,
        PairPolys::new,
        |acc, w| {
            let p = Permutation::from_word_unchecked(w.to_vec());
            if let Some((i, j)) = pair(&p) {
                acc.entry((i.min(j), i.max(j))).or_insert_with(|| vec![0; n])[stat(&p)] += 1;
            }
        },
        |mut a, b| {
            for (k, v) in b {
                let e = a.entry(k).or_insert_with(|| vec![0; n]);
                *e = add_vecs(std::mem::take(e), v);
            }
            a
        },
    )
}

fn fmt_pairs(m: &PairPolys) -> String {
    let parts: Vec<String> = m.iter().map(|((i, j), v)| format!("{{{i},{j}}}:{}", Poly(v.clone()))).collect();
    parts.join(" ")
}

fn wz(s: &mut Sink, max_n: usize) {
    for n in 3..=max_n {
        let top = n as u32;
        let b = pair_polys(Class::Ballot, n, |p| p.neighbors(top), Permutation::des);
        let o = pair_polys(Class::OddOrder, n, |p| p.cyclic_neighbors(top), Permutation::exc_tilde);
        s.eq(format!("n={n} des by neighbors of n vs exc~ by cyclic neighbors of n"), fmt_pairs(&b), fmt_pairs(&o));
    }
}

fn pack(w: &[u32]) -> u64 {
    w.iter().fold(0u64, |acc, &x| acc << 4 | u64::from(x - 1))
}

fn main_thm(s: &mut Sink, max_n: usize) {
    for n in 0..=max_n {
        let (count, bad, mut images) = par_fold_class(
            Class::Ballot,
            n,
            None,
            || (0u64, 0u64, Vec::new()),
            |(count, bad, images), w| {
                let p = Permutation::from_word_unchecked(w.to_vec());
                *count += 1;
                let Ok(cs) = psi_map(&p) else {
                    *bad += 1;
                    return;
                };
                let q = cs.to_permutation();
                let good = cs.is_odd_order()
                    && p.des() == q.exc_tilde()
                    && p.peaks().peak_set == q.peaks().cpeak_set
                    && psi_map_inv(&cs).is_ok_and(|r| r == p);
                if !good {
                    *bad += 1;
                }
                images.push(pack(q.word()));
            },
            |a, b| (a.0 + b.0, a.1 + b.1, [a.2, b.2].concat()),
        );
        images.par_sort_unstable();
        images.dedup();
        s.eq(format!("n={n} |ballot| = |odd order|"), count_class(Class::OddOrder, n, None), count);
        s.eq(format!("n={n} distinct images"), count, images.len() as u64);
        s.eq(format!("n={n} failures of odd order, des = exc~, PEAK = cPEAK, inverse"), 0, bad);
    }
}

fn table1(s: &mut Sink, max_n: usize) {
    let mut counts: BTreeMap<&str, Vec<u64>> = BTreeMap::new();
    for seq in &AVOIDERS {
        let p = seq.pattern().expect("pattern id");
        let row: Vec<u64> = (0..=max_n).map(|n| avoid_count(Class::Ballot, n, &p)).collect();
        for n in seq.offset..=max_n {
            if let Some(v) = seq.get(n) {
                s.eq(format!("{} n={n} brute filter vs table", seq.id), v, row[n]);
            }
            if let Some(c) = reference::closed_form(seq.id, n as u64) {
                s.eq(format!("{} n={n} brute filter vs closed form", seq.id), c, BigUint::from(row[n]));
            }
        }
        counts.insert(seq.id, row);
    }
    for (a, b) in [("ballot213", "ballot312"), ("ballot132", "ballot231")] {
        s.eq(format!("{a} and {b} Wilf-equivalent up to n={max_n}"), Poly(counts[a].clone()).to_string(), Poly(counts[b].clone()).to_string());
    }
}

fn walk_suite(s: &mut Sink, kind: WalkKind, max_n: usize) -> Result<()> {
    let (pattern, recs): (Pattern, &[BallotRecurrence]) = match kind {
        WalkKind::Gessel => ("213".parse()?, &[BallotRecurrence::E, BallotRecurrence::EAlt]),
        WalkKind::Gb => ("231".parse()?, &[BallotRecurrence::G]),
    };
    let walks = kind.recurrence_table(max_n, max_n);
    let tables: Vec<_> = recs.iter().map(|&r| (r, ballot_recurrence_table(r, max_n, max_n))).collect();
    let brute_n = max_n.min(12);
    let brute: Vec<Vec<BTreeMap<(i64, i64), u64>>> = (0..=max_n)
        .map(|h| (0..=brute_n).map(|n| brute_endpoints(kind, n, kind.axis_point(h))).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let zero = BigUint::default();
    for n in 0..=max_n {
        let mut agree = 0;
        for h in 0..=max_n {
            for b in 0..=max_n {
                let w = walks.get(n, h, b).unwrap_or(&zero);
                let dp = count_walks(kind, n, kind.axis_point(h), kind.axis_point(b), Method::StepDp)?;
                let mut ok = *w == dp && tables.iter().all(|(_, t)| t.get(n, h, b).unwrap_or(&zero) == w);
                if n <= brute_n {
                    let br = brute[h][n].get(&kind.axis_point(b)).copied().unwrap_or(0);
                    ok &= BigUint::from(br) == dp;
                }
                agree += usize::from(ok);
            }
        }
        let names: Vec<String> = tables.iter().map(|(r, _)| format!("{r:?}")).collect();
        let brute_note = if n <= brute_n { ", brute walks" } else { "" };
        s.eq(
            format!("n={n} {} = {kind} recurrence = step DP{brute_note} on 0 <= h,b <= {max_n}", names.join(" = ")),
            (max_n + 1) * (max_n + 1),
            agree,
        );
    }
    let perm_n = max_n.min(8);
    let main = &tables[0].1;
    for n in 0..=perm_n {
        for h in 0..=4 {
            for b in 0..=4 {
                let filtered = count_class(Class::HbBallot { h, b }, n + 1, Some(&pattern));
                let rec = main.get(n, h, b).cloned().unwrap_or_default();
                s.eq(format!("n={n} h={h} b={b} recurrence vs ({h},{b})-ballot {pattern}-avoiders of length {}", n + 1), rec, BigUint::from(filtered));
            }
        }
        let sum: BigUint = (0..=max_n).filter_map(|b| walks.get(n, 0, b)).sum();
        let avoiders = avoid_count(Class::Ballot, n + 1, &pattern);
        s.eq(format!("|ballot {pattern}-avoiders of length {}| = sum of {kind} axis walks of {n} steps", n + 1), BigUint::from(avoiders), sum);
    }
    match kind {
        WalkKind::Gessel => {
            let dyck_n = max_n.min(4);
            for n in 0..=max_n.min(8) {
                let g = gessel_closed_form(n);
                let dp = count_walks(kind, 2 * n, (0, 0), (0, 0), Method::StepDp)?;
                s.eq(format!("g_{n} closed form vs {}-step walk count", 2 * n), BigInt::from(dp).to_string(), g.to_string());
                if n <= dyck_n {
                    let dyck = count_class(Class::Dyck, 2 * n + 1, Some(&pattern));
                    s.eq(format!("g_{n} vs 213-avoiding Dyck permutations of length {}", 2 * n + 1), g.to_string(), dyck.to_string());
                }
            }
        }
        WalkKind::Gb => {
            for n in 0..=max_n {
                let total = count_walks_to_axis(kind, n, (0, 0), Method::StepDp)?;
                s.eq(format!("n={n} GB walks from the origin to the x-axis vs Catalan product"), reference::gb_axis_closed(n as u64), total);
            }
        }
    }
    Ok(())
}

fn egf(s: &mut Sink, max_n: usize) {
    let b = series_coefficients(SeriesKind::BEgf, max_n);
    for n in 0..=max_n {
        let bn = b.count(n, 0);
        s.eq(format!("b_{n} from the EGF vs ballot count"), bn.clone(), BigUint::from(count_class(Class::Ballot, n, None)));
        s.eq(format!("b_{n} from the EGF vs odd order count"), bn.clone(), BigUint::from(count_class(Class::OddOrder, n, None)));
        if let Some(v) = BALLOT.get(n) {
            s.eq(format!("b_{n} from the EGF vs table"), BigUint::from(v), bn);
        }
    }
    let m = max_n.min(7);
    let ocp = series_coefficients(SeriesKind::OcpEgf, m);
    for n in 1..=m {
        let row = Poly(ocp.counts_by_order(n).iter().map(|x| u64::try_from(x).unwrap()).collect()).to_string();
        s.eq(format!("n={n} OCPs by order: EGF vs enumeration"), row.clone(), Poly(ocp_count_by_order(n)).to_string());
        s.eq(format!("n={n} wlpp by order: EGF vs enumeration"), row, Poly(wlpp_count_by_order(n)).to_string());
        s.eq(format!("n={n} EGF diagonal vs b_{n}"), b.count(n, 0), ocp.count(n, n));
        let total: BigUint = ocp.counts_by_order(n).into_iter().sum();
        s.eq(format!("n={n} EGF row sum vs (2n-1)!!"), double_factorial(2 * n as i64 - 1), total);
    }
}

fn oriented(letters: &[u32]) -> Vec<u32> {
    let r: Vec<u32> = letters.iter().rev().copied().collect();
    r.min(letters.to_vec())
}

/// Failures of `Φ⁻¹ ∘ Φ = id`, order preservation and the cluster condition.
fn phi_failures(cp: &ClusterPerm) -> bool {
    let Ok(o) = phi_map(cp) else { return true };
    let src: BTreeSet<_> = cp.clusters().iter().map(|c| oriented(c.letters())).collect();
    let dst: BTreeSet<_> = o.clusters().map(|c| oriented(c.letters())).collect();
    o.order() != cp.order() || src != dst || phi_map_inv(&o).ok().as_ref() != Some(cp)
}

fn clusters(s: &mut Sink, max_n: usize) {
    for n in 1..=max_n.min(6) {
        let wlpp = wlpp_all(n);
        let bad = wlpp.iter().filter(|cp| phi_failures(cp)).count();
        let images: BTreeSet<String> = wlpp.iter().filter_map(|cp| phi_map(cp).ok()).map(|o| o.to_string()).collect();
        let ocp: BTreeSet<String> = ocp_all(n).iter().map(|o| o.to_string()).collect();
        s.eq(format!("n={n} Phi failures of inverse, order, cluster condition"), 0, bad);
        s.eq(format!("n={n} Phi image = all OCPs"), ocp.len(), images.len());
        s.eq(format!("n={n} Phi image is exactly the OCP set"), true, images == ocp);
    }
    for n in 1..=max_n.min(8) {
        let bad = enumerate_class(Class::Ballot, n, None)
            .iter()
            .filter(|p| {
                let o = phi_map(&ClusterPerm::from_permutation(p));
                let c = psi_map(p);
                match (o, c) {
                    (Ok(o), Ok(c)) => {
                        let cycles: Vec<Vec<u32>> = o.cycles().iter().map(|cy| cy.iter().map(|x| x.letters()[0]).collect()).collect();
                        CycleSystem::new(cycles).ok() != Some(c)
                    }
                    _ => true,
                }
            })
            .count();
        s.eq(format!("n={n} Phi restricted to singleton clusters differs from Psi"), 0, bad);
    }
    for n in 1..=max_n.min(6) as u64 {
        let support: Vec<u32> = (1..=n as u32).collect();
        let cycles = single_cluster_cycles(&support);
        for k in 0..=(n - 1) / 2 {
            let brute = cycles.iter().filter(|c| c.len() as u64 == 2 * k + 1).count();
            let formula = count_cluster_cycles(n, k).unwrap();
            s.eq(format!("n={n} k={k} cluster-cycles: formula vs brute"), formula, BigUint::from(brute));
        }
        let mut by_h = vec![0u64; n as usize];
        for cp in wlpp_all(n as usize) {
            by_h[cp.horizontal_steps()] += 1;
        }
        for k in 0..n {
            s.eq(format!("n={n} k={k} wlpp with k flat steps: formula vs brute"), count_wlpp_horizontal(n, k).unwrap(), BigUint::from(by_h[k as usize]));
        }
    }
    let m = max_n.min(12);
    let ocp = series_coefficients(SeriesKind::OcpEgf, m);
    for n in 1..=m as u64 {
        let total: BigUint = (0..n).map(|k| count_wlpp_horizontal(n, k).unwrap()).sum();
        s.eq(format!("n={n} sum of flat-step formula vs EGF total"), ocp.counts_by_order(n as usize).into_iter().sum::<BigUint>(), total);
    }
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize, keep: impl Fn(&Permutation) -> bool) -> Permutation {
    let mut w: Vec<u32> = (1..=n as u32).collect();
    loop {
        w.shuffle(rng);
        let p = Permutation::from_word_unchecked(w.clone());
        if keep(&p) {
            return p;
        }
    }
}

const SAMPLES: usize = 200;

fn roundtrip(s: &mut Sink, max_n: usize, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = (3 * max_n).max(1);

    let mut bad = 0;
    for _ in 0..SAMPLES {
        let n = rng.gen_range(1..=top);
        let p = random_perm(&mut rng, n, Permutation::is_ballot);
        let ok = psi_map(&p).is_ok_and(|cs| {
            let q = cs.to_permutation();
            q.is_odd_order() && p.des() == q.exc_tilde() && psi_map_inv(&cs).is_ok_and(|r| r == p)
        });
        bad += usize::from(!ok);
    }
    s.eq(format!("{SAMPLES} random ballot permutations of size <= {top}: Psi round-trip failures"), 0, bad);

    let mut bad = 0;
    for _ in 0..SAMPLES {
        let n = rng.gen_range(1..=top);
        let q = random_perm(&mut rng, n, Permutation::is_odd_order);
        let cs = q.cycles();
        let ok = psi_map_inv(&cs).is_ok_and(|p| p.is_ballot() && psi_map(&p).is_ok_and(|c| c == cs));
        bad += usize::from(!ok);
    }
    s.eq(format!("{SAMPLES} random odd order permutations of size <= {top}: Psi^-1 round-trip failures"), 0, bad);

    let mut bad = 0;
    for _ in 0..SAMPLES {
        let n = rng.gen_range(1..=top);
        let p = random_perm(&mut rng, n, |_| true);
        let flat: Vec<bool> = (1..n).map(|_| rng.gen_bool(0.3)).collect();
        let cp = ClusterPerm::from_chain(p.word(), &flat);
        if cp.is_wlpp() {
            bad += usize::from(phi_failures(&cp));
        }
    }
    s.eq(format!("random wlpp of size <= {top}: Phi round-trip failures"), 0, bad);

    let k = max_n.min(6);
    let mut supports: Vec<Vec<u32>> = vec![(1..=k as u32).collect()];
    let mut pool: Vec<u32> = (1..=3 * k as u32).collect();
    pool.shuffle(&mut rng);
    let mut sparse = pool[..k].to_vec();
    sparse.sort();
    supports.push(sparse);
    for a in supports {
        let words = oracle::box_words(&a);
        let cyclic: BTreeSet<_> = oracle::cyclic_box_perms(&a).into_iter().collect();
        let mut images = BTreeSet::new();
        let mut bad = 0;
        for w in &words {
            let c = psi(w);
            bad += usize::from(c.box_neighbors() != w.box_neighbors() || psi_inv(&c).ok().as_ref() != Some(w));
            if w.classify() == Some(BoxClass::Bp1) {
                let ok = phi(w).is_ok_and(|v| {
                    v.classify() == Some(BoxClass::Bp3) && v.box_neighbors() == w.box_neighbors() && phi_inv(&v).ok().as_ref() == Some(w)
                });
                bad += usize::from(!ok);
            }
            images.insert(c);
        }
        s.eq(format!("support {a:?}: psi image = cyclic box-permutations"), true, images == cyclic);
        s.eq(format!("support {a:?}: box-permutation round-trip failures"), 0, bad);
    }

    for which in [WilfMap::Varphi, WilfMap::Eta] {
        for n in 0..=max_n.min(8) {
            let src = enumerate_class(Class::All, n, Some(&which.source()));
            let mut images = BTreeSet::new();
            let mut bad = 0;
            for p in &src {
                match wilf_map(which, p) {
                    Ok(q) => {
                        let ok = !contains(q.word(), &which.target())
                            && q.descent_set() == p.descent_set()
                            && wilf_map_inv(which, &q).ok().as_ref() == Some(p);
                        bad += usize::from(!ok);
                        images.insert(q);
                    }
                    Err(_) => bad += 1,
                }
            }
            s.eq(format!("{which:?} n={n}: failures of target avoidance, descent set, inverse"), 0, bad);
            s.eq(format!("{which:?} n={n}: distinct images"), src.len(), images.len());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass_and_are_reproducible() {
        let a = verify_suite(Suite::All, 5, 7).unwrap();
        assert!(a.passed(), "{:?}", a.failures().collect::<Vec<_>>());
        let b = verify_suite(Suite::All, 5, 7).unwrap();
        assert_eq!(a.json_lines(), b.json_lines());
    }

    #[test]
    fn guards_and_names() {
        assert!(verify_suite(Suite::Wz, 11, 0).is_err());
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
