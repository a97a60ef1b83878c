mod common;

use common::{ideal, naive_witness, ring};
use idealis_core::classify::{
    find_one_triple_zeros, is_one_absorbing_prime, is_prime, is_two_absorbing, is_weakly_one_absorbing_prime,
    is_weakly_prime, is_weakly_two_absorbing, witness_violates, IMPLICATIONS,
};
use idealis_core::{classify, Caps, IdealLattice, Property, Witness};
use proptest::prelude::*;

const RINGS: &[&str] = &[
    "Z2", "Z4", "Z6", "Z8", "Z9", "Z12", "Z16", "Z18", "Z24", "Z27", "Z30", "Z2 x Z2", "Z2 x Z4", "Z4 x Z4",
    "Z2 x Z2 x Z2", "Z3 x Z9", "LocalAlg(2)", "Idealize(Z4, (0))", "Idealize(Z6, (3))", "Idealize(Z8, (2))",
    "Z12/(8)", "Loc(Z12, 1, 3, 9)", "(Z2 x Z4)/((0,2))",
];

#[test]
fn scans_match_definitions() {
    for text in RINGS {
        let r = ring(text);
        let lattice = IdealLattice::enumerate(&r, &Caps::default()).unwrap();
        for (_, p) in lattice.proper() {
            let report = classify(p).unwrap();
            for prop in Property::ALL {
                assert_eq!(report.witness(prop), naive_witness(prop, p), "{text} {p} {prop}");
            }
        }
    }
}

#[test]
fn golden_examples() {
    let z12 = ring("Z12");
    let p = ideal(&z12, "(4)");
    assert!(is_weakly_one_absorbing_prime(&p).unwrap().holds());
    assert_eq!(is_weakly_prime(&p).unwrap().witness(), Some(Witness::Pair(2, 2)));

    let z30 = ring("Z30");
    let p = ideal(&z30, "(6)");
    assert!(is_weakly_two_absorbing(&p).unwrap().holds());
    assert_eq!(is_weakly_one_absorbing_prime(&p).unwrap().witness(), Some(Witness::Triple(2, 2, 3)));

    let z6 = ring("Z6");
    let p = ideal(&z6, "(0)");
    assert!(is_weakly_one_absorbing_prime(&p).unwrap().holds());
    assert_eq!(is_one_absorbing_prime(&p).unwrap().witness(), Some(Witness::Triple(2, 2, 3)));
    let zeros = find_one_triple_zeros(&p).unwrap();
    assert!(zeros.iter().any(|t| (t.x, t.y, t.z) == (2, 2, 3)));

    let z4 = ring("Z4");
    let p = ideal(&z4, "(0)");
    assert!(is_one_absorbing_prime(&p).unwrap().holds());
    assert_eq!(is_prime(&p).unwrap().witness(), Some(Witness::Pair(2, 2)));
}

#[test]
fn separating_examples() {
    use Property::*;
    let cases = [
        ((Prime, WeaklyPrime), "Z4", "(0)"),
        ((Prime, OneAbsorbingPrime), "Z4", "(0)"),
        ((WeaklyPrime, WeaklyOneAbsorbingPrime), "Z12", "(4)"),
        ((OneAbsorbingPrime, WeaklyOneAbsorbingPrime), "Z6", "(0)"),
        ((OneAbsorbingPrime, TwoAbsorbing), "Z6", "(0)"),
        ((TwoAbsorbing, WeaklyTwoAbsorbing), "Z8", "(0)"),
        ((WeaklyOneAbsorbingPrime, WeaklyTwoAbsorbing), "Z30", "(6)"),
    ];
    for ((a, b), r, i) in cases {
        let r = ring(r);
        let rep = classify(&ideal(&r, i)).unwrap();
        assert!(rep.holds(b) && !rep.holds(a), "{a} -> {b} not separated by {r} {i}");
    }
    assert_eq!(IMPLICATIONS.len(), cases.len());
}

#[test]
fn two_absorbing_scan_skips_nothing() {
    // Zero ideal of Z2 x Z2 x Z2: 2-absorbing fails with pairwise products
    // leaving P, so the witness has to use elements outside P.
    let r = ring("Z2 x Z2 x Z2");
    let p = ideal(&r, "(((0,0),0))");
    assert_eq!(is_two_absorbing(&p).unwrap().witness(), naive_witness(Property::TwoAbsorbing, &p));
    assert!(!is_two_absorbing(&p).unwrap().holds());
}

#[test]
fn witnesses_recheck() {
    for text in RINGS {
        let r = ring(text);
        let lattice = IdealLattice::enumerate(&r, &Caps::default()).unwrap();
        for (_, p) in lattice.proper() {
            let rep = classify(p).unwrap();
            assert!(rep.recheck().is_empty());
            for (prop, v) in rep.verdicts() {
                if let Some(w) = v.witness() {
                    assert!(witness_violates(prop, p, w));
                }
            }
        }
    }
}

#[test]
fn triple_zeros_are_exactly_the_weak_gap() {
    // A w1ap ideal that is not 1A must have a 1-triple zero, and a 1A ideal
    // has none.
    for text in RINGS {
        let r = ring(text);
        let lattice = IdealLattice::enumerate(&r, &Caps::default()).unwrap();
        for (_, p) in lattice.proper() {
            let rep = classify(p).unwrap();
            if !rep.holds(Property::WeaklyOneAbsorbingPrime) {
                assert!(find_one_triple_zeros(p).is_err());
                continue;
            }
            let zeros = find_one_triple_zeros(p).unwrap();
            assert_eq!(zeros.is_empty(), rep.holds(Property::OneAbsorbingPrime), "{text} {p}");
            for t in zeros {
                assert!(t.is_triple_zero_of(p));
            }
        }
    }
}

fn small_ring() -> impl Strategy<Value = String> {
    prop_oneof![
        (2u64..=40).prop_map(|n| format!("Z{n}")),
        (2u64..=8, 2u64..=8).prop_map(|(a, b)| format!("Z{a} x Z{b}")),
        (2u64..=8)
            .prop_flat_map(|n| (Just(n), 0..n))
            .prop_filter("proper ideal", |&(n, d)| common::gcd(n, d) > 1)
            .prop_map(|(n, d)| format!("Idealize(Z{n}, ({d}))")),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn diagram_holds_on_random_rings(text in small_ring()) {
        let r = ring(&text);
        let lattice = IdealLattice::enumerate(&r, &Caps::default()).unwrap();
        for (_, p) in lattice.proper() {
            let rep = classify(p).unwrap();
            prop_assert!(rep.broken_implications().is_empty(), "{} {}: {:?}", text, p, rep.broken_implications());
            for prop in Property::ALL {
                prop_assert_eq!(rep.witness(prop), naive_witness(prop, p));
            }
        }
    }
}
