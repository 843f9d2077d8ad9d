use ballot_core::perm::{count_class, par_fold_class, Class};
use ballot_core::{CycleSystem, Permutation};
use proptest::prelude::*;

fn poly(class: Class, n: usize, stat: fn(&Permutation) -> usize) -> Vec<u64> {
    par_fold_class(
        class,
        n,
        None,
        || vec![0u64; n.max(1)],
        |acc, w| acc[stat(&Permutation::new(w.to_vec()).unwrap())] += 1,
        |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
    )
}

#[test]
fn eulerian_des_equals_exc() {
    for n in 0..=8 {
        assert_eq!(poly(Class::All, n, Permutation::des), poly(Class::All, n, Permutation::exc), "n={n}");
    }
}

#[test]
fn des_over_ballot_equals_exc_tilde_over_odd_order() {
    for n in 1..=9 {
        assert_eq!(poly(Class::Ballot, n, Permutation::des), poly(Class::OddOrder, n, Permutation::exc_tilde), "n={n}");
    }
}

#[test]
fn ballot_and_odd_order_counts() {
    let b = [1u64, 1, 1, 3, 9, 45, 225, 1575, 11025, 99225];
    for (n, &want) in b.iter().enumerate() {
        assert_eq!(count_class(Class::Ballot, n, None), want);
        assert_eq!(count_class(Class::OddOrder, n, None), want);
    }
}

fn perm_strategy(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle()).prop_map(|w| Permutation::new(w).unwrap())
}

proptest! {
    #[test]
    fn text_forms_round_trip(p in perm_strategy(30)) {
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p.clone());
        let cs = p.cycles();
        prop_assert_eq!(cs.to_string().parse::<CycleSystem>().unwrap(), cs.clone());
        prop_assert_eq!(cs.to_permutation(), p);
    }

    #[test]
    fn statistic_identities(p in perm_strategy(30)) {
        let n = p.len();
        prop_assert_eq!(p.asc() + p.des(), n.saturating_sub(1));
        let peaks = p.peaks();
        for pk in &peaks.peak_set {
            prop_assert!(pk.value > 2);
            prop_assert!(pk.low < pk.value && pk.high < pk.value);
        }
        for pk in &peaks.cpeak_set {
            prop_assert!(pk.low < pk.value && pk.high < pk.value);
        }
        prop_assert_eq!(p.is_ballot(), p.ballot_profile(0).is_ballot);
        prop_assert_eq!(p.inverse().inverse(), p);
    }
}
