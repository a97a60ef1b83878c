mod common;

use common::{gcd, ring};
use idealis_core::ring::{isomorphism_search, localization, zn};
use idealis_core::{Caps, Error, FiniteRing};
use proptest::prelude::*;

fn caps() -> Caps {
    Caps::default()
}

fn isomorphic(a: &str, b: &str) -> bool {
    isomorphism_search(&ring(a), &ring(b), &caps()).unwrap().is_some()
}

/// Additive order of every element, sorted: a cheap isomorphism invariant.
fn additive_orders(r: &FiniteRing) -> Vec<usize> {
    let mut v: Vec<usize> = r
        .elements()
        .map(|a| {
            let mut k = 1;
            let mut x = a;
            while x != r.zero() {
                x = r.add(x, a);
                k += 1;
            }
            k
        })
        .collect();
    v.sort();
    v
}

#[test]
fn localization_of_z12_at_powers_of_three() {
    let r = ring("Loc(Z12, 1, 3, 9)");
    assert_eq!(r.size(), 4);
    assert!(isomorphic("Loc(Z12, 1, 3, 9)", "Z4"));
    assert!(!isomorphic("Loc(Z12, 1, 3, 9)", "Z2 x Z2"));
}

#[test]
fn localization_of_z6_at_powers_of_two() {
    assert!(isomorphic("Loc(Z6, 1, 2, 4)", "Z3"));
}

#[test]
fn localization_at_units_changes_nothing() {
    assert!(isomorphic("Loc(Z12, 1, 5, 7, 11)", "Z12"));
}

#[test]
fn localization_rejects_bad_sets() {
    let z12 = zn(12, &caps()).unwrap();
    assert_eq!(localization(&z12, &[1, 0], &caps()).unwrap_err(), Error::ZeroInS);
    assert_eq!(localization(&z12, &[3, 9], &caps()).unwrap_err(), Error::OneNotInS);
    assert!(matches!(localization(&z12, &[1, 3], &caps()).unwrap_err(), Error::NotMultClosed { .. }));
}

#[test]
fn chinese_remainder() {
    for (a, b) in [(2u64, 3u64), (3, 4), (4, 5), (3, 5)] {
        assert!(isomorphic(&format!("Z{a} x Z{b}"), &format!("Z{}", a * b)));
    }
    assert!(!isomorphic("Z2 x Z2", "Z4"));
    assert!(!isomorphic("Z2 x Z4", "Z8"));
}

#[test]
fn quotients_of_cyclic_rings() {
    for (n, d) in [(12u64, 4u64), (12, 6), (30, 5), (8, 2)] {
        assert!(isomorphic(&format!("Z{n}/({d})"), &format!("Z{d}")), "Z{n}/({d})");
    }
}

#[test]
fn idealization_shape() {
    // Z4 ⋉ Z4/(2): 8 elements, characteristic 4, units are (unit, anything).
    let r = ring("Idealize(Z4, (2))");
    assert_eq!(r.size(), 8);
    assert_eq!(r.units().len(), 4);
    assert_eq!(*additive_orders(&r).last().unwrap(), 4);
    assert!(!isomorphic("Idealize(Z4, (2))", "Z8"));
    assert!(!isomorphic("Idealize(Z4, (2))", "Z2 x Z4"));
}

#[test]
fn local_algebra_shape() {
    for p in [2u64, 3] {
        let r = ring(&format!("LocalAlg({p})"));
        let n = (p * p * p) as usize;
        assert_eq!(r.size(), n);
        assert_eq!(r.units().len(), n - n / p as usize);
        assert!(additive_orders(&r).iter().all(|&o| o == 1 || o == p as usize));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_units_are_pairs_of_units(a in 2u64..=12, b in 2u64..=12) {
        let r = ring(&format!("Z{a} x Z{b}"));
        let expected = (0..a).filter(|&x| gcd(x, a) == 1).count() * (0..b).filter(|&y| gcd(y, b) == 1).count();
        prop_assert_eq!(r.units().len(), expected);
        prop_assert_eq!(r.size() as u64, a * b);
    }

    #[test]
    fn idealization_sizes(n in 2u64..=10, d in 0u64..10) {
        let d = d % n;
        prop_assume!(gcd(n, d) > 1);
        let r = ring(&format!("Idealize(Z{n}, ({d}))"));
        let m = gcd(n, d);
        prop_assert_eq!(r.size() as u64, n * m);
        // (a, x) is a unit iff a is.
        let units = (0..n).filter(|&a| gcd(a, n) == 1).count() as u64 * m;
        prop_assert_eq!(r.units().len() as u64, units);
    }
}
