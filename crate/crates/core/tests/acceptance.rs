//! Acceptance criteria, one test per criterion. Each test also prints a
//! `criterion N: PASS|FAIL` line (visible with `--nocapture`).

use std::collections::BTreeSet;
use std::time::Instant;

use ballot_core::boxperm::{oracle, phi, phi_inv, psi, psi_inv, BoxClass};
use ballot_core::clusters::{
    count_cluster_cycles, ocp_count_by_order, series_coefficients, single_cluster_cycles, wlpp_count_by_order,
    SeriesKind,
};
use ballot_core::patterns::{avoid_count, contains, wilf_map, wilf_map_inv, Pattern, WilfMap};
use ballot_core::perm::{count_class, enumerate_class, Class};
use ballot_core::reference::{self, BALLOT};
use ballot_core::verify::{verify_suite, Suite};
use ballot_core::walks::{count_walks, gessel_closed_form, Method, WalkKind};
use num_bigint::{BigInt, BigUint};

fn report(id: u32, what: &str, run: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = run();
    let secs = start.elapsed().as_secs_f64();
    match &outcome {
        Ok(()) => println!("criterion {id}: PASS  {what} ({secs:.1} s)"),
        Err(e) => println!("criterion {id}: FAIL  {what} ({secs:.1} s): {e}"),
    }
    if let Err(e) = outcome {
        panic!("criterion {id} failed: {e}");
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite(s: Suite, max_n: usize) -> Result<(), String> {
    let r = verify_suite(s, max_n, 0).map_err(|e| e.to_string())?;
    if let Some(c) = r.failures().next() {
        return Err(format!("{}: expected {}, got {}", c.check, c.expected, c.actual));
    }
    ensure(!r.checks.is_empty(), || format!("suite {s} ran no checks"))
}

#[test]
fn criterion_01_cardinalities() {
    report(1, "|B_n| = |O_n| = b_n for n <= 10", || {
        let egf = series_coefficients(SeriesKind::BEgf, 10);
        for n in 0..=10 {
            let b = egf.count(n, 0);
            if let Some(v) = BALLOT.get(n) {
                ensure(b == BigUint::from(v), || format!("EGF b_{n} = {b}, listed {v}"))?;
            }
            let ballot = BigUint::from(count_class(Class::Ballot, n, None));
            let odd = BigUint::from(count_class(Class::OddOrder, n, None));
            ensure(ballot == b && odd == b, || format!("n={n}: ballot {ballot}, odd order {odd}, b_n {b}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_02_descents_against_cyclic_excedances() {
    report(2, "sum over B_n of t^des = sum over O_n of t^exc~ for n <= 9", || suite(Suite::Spiro, 9));
}

#[test]
fn criterion_03_refinement_by_neighbors_of_n() {
    report(3, "refinement by (cyclic) neighbors of n for n <= 8", || suite(Suite::Wz, 8));
}

#[test]
fn criterion_04_main_bijection() {
    report(4, "Psi bijective, invertible, des = exc~, PEAK = cPEAK for n <= 9", || suite(Suite::MainThm, 9));
}

#[test]
fn criterion_05_box_bijection() {
    report(5, "psi: BP(A) -> cBP(A) preserves box-neighbor-sets, |A| <= 6", || {
        let mut supports: Vec<Vec<u32>> = (0..=6).map(|k| (1..=k).collect()).collect();
        supports.extend([vec![2, 5], vec![1, 4, 9], vec![3, 7, 8, 20], vec![1, 5, 6, 9, 11], vec![2, 4, 5, 6, 9, 14]]);
        for a in supports {
            let words = oracle::box_words(&a);
            let cyclic: BTreeSet<_> = oracle::cyclic_box_perms(&a).into_iter().collect();
            let mut images = BTreeSet::new();
            for w in &words {
                let c = psi(w);
                ensure(c.box_neighbors() == w.box_neighbors(), || format!("{w} -> {c} changes box neighbors"))?;
                ensure(psi_inv(&c).ok().as_ref() == Some(w), || format!("psi_inv fails on {c}"))?;
                if w.classify() == Some(BoxClass::Bp1) {
                    let v = phi(w).map_err(|e| e.to_string())?;
                    ensure(phi_inv(&v).ok().as_ref() == Some(w), || format!("phi_inv fails on {v}"))?;
                }
                images.insert(c);
            }
            ensure(images.len() == words.len() && images == cyclic, || format!("psi is not onto cBP({a:?})"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_06_cluster_bijection() {
    report(6, "Phi bijective, order-preserving, cluster condition, restricts to Psi (size <= 6)", || {
        suite(Suite::Clusters, 6)
    });
}

#[test]
fn criterion_07_generating_functions() {
    report(7, "EGF coefficients = |OC_n,k| = |P_n,k| (n <= 7); cluster-cycle formula (n <= 6)", || {
        let s = series_coefficients(SeriesKind::OcpEgf, 7);
        for n in 1..=7 {
            let egf: Vec<BigUint> = s.counts_by_order(n);
            let ocp: Vec<BigUint> = ocp_count_by_order(n).into_iter().map(BigUint::from).collect();
            let wlpp: Vec<BigUint> = wlpp_count_by_order(n).into_iter().map(BigUint::from).collect();
            ensure(egf == ocp && egf == wlpp, || format!("n={n}: EGF {egf:?}, OCP {ocp:?}, wlpp {wlpp:?}"))?;
        }
        for n in 1..=6u64 {
            let cycles = single_cluster_cycles(&(1..=n as u32).collect::<Vec<_>>());
            for k in 0..=(n - 1) / 2 {
                let brute = cycles.iter().filter(|c| c.len() as u64 == 2 * k + 1).count();
                let f = count_cluster_cycles(n, k).map_err(|e| e.to_string())?;
                ensure(f == BigUint::from(brute), || format!("n={n} k={k}: formula {f}, brute {brute}"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_08_length_three_patterns() {
    report(8, "ballot avoider rows and closed forms (n <= 9, 123 to n = 10)", || {
        suite(Suite::Table1, 9)?;
        let p: Pattern = "123".parse().unwrap();
        let c = avoid_count(Class::Ballot, 10, &p);
        let row = reference::lookup("ballot123").unwrap().get(10).unwrap();
        ensure(c == row && BigUint::from(c) == reference::ballot123_closed(10), || format!("n=10: {c}"))
    });
}

#[test]
fn criterion_09_gessel_recurrences() {
    report(9, "E = E_alt = F (step DP, brute) for n,h,b <= 12; 213 avoiders vs walk sums", || {
        suite(Suite::Gessel213, 12)
    });
}

#[test]
fn criterion_10_gouyou_beauchamps_recurrences() {
    report(10, "G = H for n,h,b <= 12; GB x-axis totals are Catalan products", || suite(Suite::Gb231, 12));
}

#[test]
fn criterion_11_gessel_closed_form() {
    report(11, "g_n integral, equals excursion count (n <= 8) and 213-avoiding Dyck count of length 2n+1 (n <= 4)", || {
        let p: Pattern = "213".parse().unwrap();
        for n in 0..=8 {
            let g = gessel_closed_form(n);
            ensure(g.is_integer(), || format!("g_{n} = {g} is not an integer"))?;
            let dp = count_walks(WalkKind::Gessel, 2 * n, (0, 0), (0, 0), Method::StepDp).map_err(|e| e.to_string())?;
            ensure(g.to_integer() == BigInt::from(dp.clone()), || format!("g_{n} = {g}, walks {dp}"))?;
            if n <= 4 {
                let dyck = count_class(Class::Dyck, 2 * n + 1, Some(&p));
                ensure(g.to_integer() == BigInt::from(dyck), || format!("g_{n} = {g}, Dyck avoiders {dyck}"))?;
            }
        }
        let anchors: Vec<BigInt> = (0..3).map(|n| gessel_closed_form(n).to_integer()).collect();
        ensure(anchors == [1, 2, 11].map(BigInt::from), || format!("g_0..g_2 = {anchors:?}"))
    });
}

#[test]
fn criterion_12_wilf_maps() {
    report(12, "Wilf maps bijective and descent-preserving (n <= 8); Wilf-equivalent counts (n <= 10)", || {
        for which in [WilfMap::Varphi, WilfMap::Eta] {
            for n in 0..=8 {
                let src = enumerate_class(Class::All, n, Some(&which.source()));
                let mut images = BTreeSet::new();
                for p in &src {
                    let q = wilf_map(which, p).map_err(|e| e.to_string())?;
                    ensure(!contains(q.word(), &which.target()), || format!("{which:?}({p}) = {q} contains the target"))?;
                    ensure(q.descent_set() == p.descent_set(), || format!("{which:?}({p}) = {q} moves descents"))?;
                    ensure(wilf_map_inv(which, &q).ok().as_ref() == Some(p), || format!("{which:?} inverse fails on {q}"))?;
                    images.insert(q);
                }
                let target = count_class(Class::All, n, Some(&which.target()));
                ensure(images.len() == src.len() && images.len() as u64 == target, || format!("{which:?} n={n} not a bijection"))?;
            }
        }
        let pat = |s: &str| s.parse::<Pattern>().unwrap();
        for n in 0..=10 {
            for (a, b) in [("213", "312"), ("132", "231")] {
                let (x, y) = (avoid_count(Class::Ballot, n, &pat(a)), avoid_count(Class::Ballot, n, &pat(b)));
                ensure(x == y, || format!("n={n}: |B_n({a})| = {x}, |B_n({b})| = {y}"))?;
            }
        }
        Ok(())
    });
}
