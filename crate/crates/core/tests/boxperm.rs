use std::collections::BTreeSet;

use ballot_core::boxperm::{
    oracle, phi, phi_inv, phi_inverse_conditions, phi_with_case, psi, psi_inv, BoxClass, BoxWord,
};

fn supports() -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = (0..=6).map(|k| (1..=k).collect()).collect();
    out.push(vec![2, 4, 5]);
    out.push(vec![3, 7, 8, 20]);
    out.push(vec![1, 5, 6, 9, 11]);
    out.push(vec![2, 4, 5, 6, 9, 14]);
    out
}

#[test]
fn psi_is_a_neighbor_preserving_bijection() {
    for a in supports() {
        let words = oracle::box_words(&a);
        let cyclic = oracle::cyclic_box_perms(&a);
        assert_eq!(words.len(), cyclic.len(), "support {a:?}");
        let mut images = BTreeSet::new();
        for w in &words {
            let c = psi(w);
            assert_eq!(c.box_neighbors(), w.box_neighbors(), "{w}");
            assert_eq!(&psi_inv(&c).unwrap(), w);
            images.insert(c);
        }
        let all: BTreeSet<_> = cyclic.iter().cloned().collect();
        assert_eq!(images, all, "support {a:?}");
        for c in &cyclic {
            assert_eq!(&psi(&psi_inv(c).unwrap()), c);
        }
    }
}

#[test]
fn phi_swaps_first_and_third_class() {
    for a in supports() {
        let words = oracle::box_words(&a);
        let class = |c| words.iter().filter(move |w| w.classify() == Some(c));
        let mut images = BTreeSet::new();
        for w in class(BoxClass::Bp1) {
            let (out, case) = phi_with_case(w).unwrap();
            assert_eq!(out.classify(), Some(BoxClass::Bp3), "{w}");
            assert_eq!(out.box_neighbors(), w.box_neighbors());
            let fired: Vec<_> = phi_inverse_conditions(&out).into_iter().filter(|c| c.1).collect();
            assert_eq!(fired, vec![(case, true)], "{w} -> {out}");
            assert_eq!(&phi_inv(&out).unwrap(), w);
            images.insert(out);
        }
        let third: BTreeSet<BoxWord> = class(BoxClass::Bp3).cloned().collect();
        assert_eq!(images, third, "support {a:?}");
        for w in &third {
            let fired = phi_inverse_conditions(w).iter().filter(|c| c.1).count();
            assert_eq!(fired, 1, "{w}");
            assert_eq!(&phi(&phi_inv(w).unwrap()).unwrap(), w);
        }
    }
}

#[test]
fn seven_words_on_three_letters() {
    let words = oracle::box_words(&[1, 2, 3]);
    let cyclic = oracle::cyclic_box_perms(&[1, 2, 3]);
    let images: BTreeSet<_> = words.iter().map(psi).collect();
    assert_eq!(words.len(), 7);
    assert_eq!(images, cyclic.into_iter().collect());
}
