use std::collections::BTreeSet;

use ballot_core::clusters::{
    count_cluster_cycles, count_wlpp_horizontal, ocp_all, ocp_count_by_order, phi_map, phi_map_inv,
    series_coefficients, single_cluster_cycles, wlpp_all, wlpp_count_by_order, Cluster, SeriesKind,
};
use ballot_core::dyck::psi_map;
use ballot_core::perm::{enumerate_class, Class};
use num_bigint::BigUint;

fn oriented(c: &Cluster) -> Vec<u32> {
    let a = c.letters().to_vec();
    let b = c.reversed().letters().to_vec();
    a.min(b)
}

#[test]
fn phi_is_an_order_preserving_bijection() {
    for n in 1..=6 {
        let all = ocp_all(n);
        let mut images = BTreeSet::new();
        for cp in wlpp_all(n) {
            let o = phi_map(&cp).unwrap();
            assert_eq!(o.order(), cp.order(), "{cp}");
            let src: BTreeSet<_> = cp.clusters().iter().map(oriented).collect();
            let dst: BTreeSet<_> = o.clusters().map(oriented).collect();
            assert_eq!(src, dst, "{cp} -> {o}");
            assert_eq!(phi_map_inv(&o).unwrap(), cp);
            assert!(images.insert(o.to_string()), "{cp} collides");
        }
        assert_eq!(images.len(), all.len(), "n={n}");
        assert!(all.iter().all(|o| images.contains(&o.to_string())));
    }
}

#[test]
fn phi_restricts_to_psi() {
    for n in 1..=7 {
        for p in enumerate_class(Class::Ballot, n, None) {
            let cp = ballot_core::clusters::ClusterPerm::from_permutation(&p);
            let o = phi_map(&cp).unwrap();
            let c = psi_map(&p).unwrap();
            let as_cycles: Vec<Vec<u32>> = o.cycles().iter().map(|cy| cy.iter().map(|x| x.letters()[0]).collect()).collect();
            let want: Vec<Vec<u32>> = c.cycles().to_vec();
            assert_eq!(as_cycles, want, "{p}");
        }
    }
}

#[test]
fn egf_matches_enumeration_by_order() {
    let s = series_coefficients(SeriesKind::OcpEgf, 7);
    for n in 1..=7 {
        let egf: Vec<BigUint> = s.counts_by_order(n);
        let ocp: Vec<BigUint> = ocp_count_by_order(n).into_iter().map(BigUint::from).collect();
        assert_eq!(egf, ocp, "n={n}");
        if n <= 6 {
            let wlpp: Vec<BigUint> = wlpp_count_by_order(n).into_iter().map(BigUint::from).collect();
            assert_eq!(egf, wlpp, "n={n}");
        }
    }
}

#[test]
fn cluster_cycle_formula() {
    assert_eq!(count_cluster_cycles(1, 0).unwrap(), BigUint::from(1u32));
    assert_eq!(count_cluster_cycles(3, 1).unwrap(), BigUint::from(2u32));
    assert!(count_cluster_cycles(4, 2).is_err());
    for n in 1..=6u32 {
        let support: Vec<u32> = (1..=n).collect();
        let cycles = single_cluster_cycles(&support);
        for k in 0..=(n as u64 - 1) / 2 {
            let brute = cycles.iter().filter(|c| c.len() as u64 == 2 * k + 1).count();
            assert_eq!(count_cluster_cycles(n as u64, k).unwrap(), BigUint::from(brute), "n={n} k={k}");
        }
    }
}

#[test]
fn horizontal_formula() {
    assert_eq!(count_wlpp_horizontal(1, 0).unwrap(), BigUint::from(1u32));
    assert!(count_wlpp_horizontal(3, 3).is_err());
    let s = series_coefficients(SeriesKind::OcpEgf, 7);
    for n in 1..=7u64 {
        let total: BigUint = (0..n).map(|k| count_wlpp_horizontal(n, k).unwrap()).sum();
        let egf: BigUint = s.counts_by_order(n as usize).into_iter().sum();
        assert_eq!(total, egf, "n={n}");
    }
    for n in 1..=6u64 {
        let mut brute = vec![0u64; n as usize];
        for cp in wlpp_all(n as usize) {
            brute[cp.horizontal_steps()] += 1;
        }
        for k in 0..n {
            assert_eq!(count_wlpp_horizontal(n, k).unwrap(), BigUint::from(brute[k as usize]), "n={n} k={k}");
        }
    }
}
