use std::collections::BTreeSet;

use ballot_core::patterns::{
    avoid_count, ballot_recurrence_table, contains, contains_naive, wilf_map, wilf_map_inv, BallotRecurrence, Pattern,
    WilfMap,
};
use ballot_core::perm::{count_class, enumerate_class, Class};
use ballot_core::reference::{self, AVOIDERS};
use ballot_core::walks::{brute_endpoints, WalkKind};
use ballot_core::Permutation;
use num_bigint::BigUint;
use proptest::prelude::*;

fn pat(s: &str) -> Pattern {
    s.parse().unwrap()
}

#[test]
fn every_length_three_pattern_is_catalan_on_all_permutations() {
    for p in enumerate_class(Class::All, 3, None) {
        let p = Pattern::new(p.into_word()).unwrap();
        for n in 0..=8 {
            assert_eq!(BigUint::from(avoid_count(Class::All, n, &p)), reference::catalan(n as u64), "{p} n={n}");
        }
    }
}

#[test]
fn ballot_avoider_rows() {
    for seq in &AVOIDERS {
        let p = seq.pattern().unwrap();
        for n in seq.offset..=seq.max_n().min(9) {
            assert_eq!(avoid_count(Class::Ballot, n, &p), seq.get(n).unwrap(), "{} n={n}", seq.id);
        }
    }
}

#[test]
fn recurrences_match_walks_and_each_other() {
    let e = ballot_recurrence_table(BallotRecurrence::E, 12, 12);
    let e_alt = ballot_recurrence_table(BallotRecurrence::EAlt, 12, 12);
    let g = ballot_recurrence_table(BallotRecurrence::G, 12, 12);
    for (kind, tables) in [(WalkKind::Gessel, vec![&e, &e_alt]), (WalkKind::Gb, vec![&g])] {
        for h in 0..=12 {
            for n in 0..=12 {
                let tally = brute_endpoints(kind, n, kind.axis_point(h)).unwrap();
                for b in 0..=12 {
                    let brute = BigUint::from(tally.get(&kind.axis_point(b)).copied().unwrap_or(0));
                    for t in &tables {
                        assert_eq!(t.get(n, h, b).cloned().unwrap_or_default(), brute, "{kind} n={n} h={h} b={b}");
                    }
                }
            }
        }
    }
}

#[test]
fn recurrences_count_hb_ballot_avoiders() {
    let e = ballot_recurrence_table(BallotRecurrence::E, 8, 4);
    let g = ballot_recurrence_table(BallotRecurrence::G, 8, 4);
    for (table, p) in [(&e, pat("213")), (&g, pat("231"))] {
        for n in 0..=8 {
            for h in 0..=4 {
                for b in 0..=4 {
                    let brute = count_class(Class::HbBallot { h, b }, n + 1, Some(&p));
                    assert_eq!(table.get(n, h, b).cloned().unwrap_or_default(), BigUint::from(brute), "{p} n={n} h={h} b={b}");
                }
            }
            let total: BigUint = (0..=n + 1).filter_map(|b| table.get(n, 0, b)).sum();
            assert_eq!(total, BigUint::from(avoid_count(Class::Ballot, n + 1, &p)), "{p} n={n}");
        }
    }
}

#[test]
fn wilf_maps_preserve_descent_sets() {
    for which in [WilfMap::Varphi, WilfMap::Eta] {
        for n in 0..=8 {
            let src = enumerate_class(Class::All, n, Some(&which.source()));
            let mut images = BTreeSet::new();
            for p in &src {
                let q = wilf_map(which, p).unwrap();
                assert!(!contains(q.word(), &which.target()), "{which:?} {p} -> {q}");
                assert_eq!(q.descent_set(), p.descent_set(), "{which:?} {p} -> {q}");
                assert_eq!(&wilf_map_inv(which, &q).unwrap(), p);
                images.insert(q);
            }
            assert_eq!(images.len(), src.len());
            assert_eq!(images.len() as u64, count_class(Class::All, n, Some(&which.target())));
        }
    }
}

#[test]
fn wilf_equivalent_ballot_counts() {
    for n in 0..=10 {
        assert_eq!(avoid_count(Class::Ballot, n, &pat("213")), avoid_count(Class::Ballot, n, &pat("312")), "n={n}");
        assert_eq!(avoid_count(Class::Ballot, n, &pat("132")), avoid_count(Class::Ballot, n, &pat("231")), "n={n}");
    }
}

#[test]
fn wilf_maps_reject_wrong_inputs() {
    let p: Permutation = "2 1 3".parse().unwrap();
    assert!(wilf_map(WilfMap::Varphi, &p).is_err());
    assert!(wilf_map_inv(WilfMap::Varphi, &"3 1 2".parse().unwrap()).is_err());
    assert!(wilf_map(WilfMap::Eta, &"1 3 2".parse().unwrap()).is_err());
}

proptest! {
    #[test]
    fn fast_containment_matches_naive(w in (0usize..12).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle()),
                                      p in Just(vec![1u32, 2, 3]).prop_shuffle()) {
        let p = Pattern::new(p).unwrap();
        prop_assert_eq!(contains(&w, &p), contains_naive(&w, &p));
    }
}
