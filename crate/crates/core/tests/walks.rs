use ballot_core::patterns::Pattern;
use ballot_core::perm::{count_class, Class};
use ballot_core::reference::gb_axis_closed;
use ballot_core::walks::{count_walks, count_walks_to_axis, gessel_closed_form, Method, WalkKind};
use num_bigint::{BigInt, BigUint};

#[test]
fn methods_agree() {
    for kind in [WalkKind::Gessel, WalkKind::Gb] {
        for n in 0..=10 {
            for h in 0..=4 {
                for b in 0..=4 {
                    let (s, e) = (kind.axis_point(h), kind.axis_point(b));
                    let dp = count_walks(kind, n, s, e, Method::StepDp).unwrap();
                    assert_eq!(count_walks(kind, n, s, e, Method::Recurrence).unwrap(), dp, "{kind} n={n} h={h} b={b}");
                    assert_eq!(count_walks(kind, n, s, e, Method::Brute).unwrap(), dp, "{kind} n={n} h={h} b={b}");
                }
            }
        }
    }
}

#[test]
fn gessel_closed_form_counts_excursions() {
    for n in 0..=8 {
        let g = gessel_closed_form(n);
        assert!(g.is_integer(), "g_{n} = {g}");
        let dp = count_walks(WalkKind::Gessel, 2 * n, (0, 0), (0, 0), Method::StepDp).unwrap();
        assert_eq!(g.to_integer(), BigInt::from(dp), "n={n}");
    }
    let anchors = [1u32, 2, 11];
    for (n, &a) in anchors.iter().enumerate() {
        assert_eq!(gessel_closed_form(n).to_integer(), BigInt::from(a));
    }
}

#[test]
fn gessel_numbers_count_odd_length_213_avoiding_dyck_permutations() {
    let p: Pattern = "213".parse().unwrap();
    for n in 0..=4 {
        let g = gessel_closed_form(n).to_integer();
        assert_eq!(BigInt::from(count_class(Class::Dyck, 2 * n + 1, Some(&p))), g, "length {}", 2 * n + 1);
    }
    // Indexing by length instead fails already at n = 3.
    assert_ne!(BigInt::from(count_class(Class::Dyck, 3, Some(&p))), gessel_closed_form(3).to_integer());
}

#[test]
fn gb_axis_totals_are_catalan_products() {
    for n in 0..=10 {
        let total = count_walks_to_axis(WalkKind::Gb, n, (0, 0), Method::StepDp).unwrap();
        assert_eq!(total, gb_axis_closed(n as u64), "n={n}");
    }
    assert_eq!(gb_axis_closed(6), BigUint::from(70u32));
}

#[test]
fn gb_walks_stay_below_the_diagonal() {
    for n in 0..=8 {
        for x in 0..=4 {
            for y in x + 1..=5 {
                assert_eq!(count_walks(WalkKind::Gb, n, (0, 0), (x, y), Method::StepDp).unwrap(), BigUint::default());
            }
        }
    }
}
