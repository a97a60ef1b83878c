mod common;

use common::{gcd, naive_ideal_sets, ring};
use idealis_core::ideal::{is_reduced, jacobson};
use idealis_core::ring::{quotient, zn};
use idealis_core::{Caps, Ideal, IdealLattice};
use proptest::prelude::*;

fn divisor_count(n: u64) -> usize {
    (1..=n).filter(|d| n % d == 0).count()
}

fn lattice(text: &str) -> IdealLattice {
    IdealLattice::enumerate(&ring(text), &Caps::default()).unwrap()
}

#[test]
fn cyclic_lattices_have_one_ideal_per_divisor() {
    for n in 2..=120u64 {
        let l = IdealLattice::enumerate(&zn(n, &Caps::default()).unwrap(), &Caps::default()).unwrap();
        assert_eq!(l.len(), divisor_count(n), "Z{n}");
    }
}

#[test]
fn products_multiply_ideal_counts() {
    for a in 2..=10u64 {
        for b in a..=10 {
            let l = lattice(&format!("Z{a} x Z{b}"));
            assert_eq!(l.len(), divisor_count(a) * divisor_count(b), "Z{a} x Z{b}");
        }
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for text in ["Z12", "Z2 x Z2 x Z2", "LocalAlg(2)", "LocalAlg(3)", "Idealize(Z4, (0))", "Idealize(Z6, (2))", "Z4 x Z4"] {
        let l = lattice(text);
        let mut ours: Vec<Vec<bool>> = l.ideals().iter().map(|i| i.mask().to_vec()).collect();
        let mut naive = naive_ideal_sets(l.ring());
        ours.sort();
        naive.sort();
        assert_eq!(ours, naive, "{text}");
    }
}

#[test]
fn covering_edges_of_cyclic_rings() {
    // Covering pairs in the divisor lattice of n: d' | d with d/d' prime.
    for n in [12u64, 30, 36, 64, 97] {
        let l = IdealLattice::enumerate(&zn(n, &Caps::default()).unwrap(), &Caps::default()).unwrap();
        let expected: usize = (1..=n)
            .filter(|d| n % d == 0)
            .map(|d| (2..=d).filter(|&p| d % p == 0 && (2..p).all(|q| p % q != 0)).count())
            .sum();
        assert_eq!(l.covering_edges().len(), expected, "Z{n}");
    }
}

#[test]
fn jacobson_of_cyclic_rings_is_the_radical_of_n() {
    for n in 2..=100u64 {
        let r = zn(n, &Caps::default()).unwrap();
        let rad: u64 = (2..=n).filter(|&p| n % p == 0 && (2..p).all(|q| p % q != 0)).product();
        let expected = Ideal::generated(&r, &[(rad % n) as usize]).unwrap();
        assert_eq!(jacobson(&r, &Caps::default()).unwrap(), expected, "Z{n}");
        assert_eq!(is_reduced(&r), rad == n, "Z{n}");
    }
}

#[test]
fn jacobson_stabilizes_after_one_quotient() {
    for text in ["Z8", "Z12", "Z72", "Z2 x Z4", "LocalAlg(3)", "Idealize(Z6, (0))"] {
        let r = ring(text);
        let j = jacobson(&r, &Caps::default()).unwrap();
        if !j.is_proper() || j.is_zero() {
            continue;
        }
        let (q, _) = quotient(&r, &j).unwrap();
        assert!(jacobson(&q, &Caps::default()).unwrap().is_zero(), "{text}");
    }
}

#[test]
fn units_of_cyclic_rings_are_coprime_residues() {
    for n in 2..=100u64 {
        let r = zn(n, &Caps::default()).unwrap();
        let expected: Vec<usize> = (0..n).filter(|&a| gcd(a, n) == 1).map(|a| a as usize).collect();
        assert_eq!(r.units(), expected.as_slice());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn radical_is_idempotent_and_meets(n in 2u64..=200, i in 0usize..64, j in 0usize..64) {
        let r = zn(n, &Caps::default()).unwrap();
        let l = IdealLattice::enumerate(&r, &Caps::default()).unwrap();
        let p = l.get(i % l.len());
        let q = l.get(j % l.len());
        let rad = p.radical();
        prop_assert_eq!(&rad.radical(), &rad);
        prop_assert!(p.is_subset_of(&rad));
        prop_assert_eq!(p.intersect(q).unwrap().radical(), rad.intersect(&q.radical()).unwrap());
    }

    #[test]
    fn sum_and_intersection_are_lattice_operations(n in 2u64..=120, i in 0usize..64, j in 0usize..64) {
        let r = zn(n, &Caps::default()).unwrap();
        let l = IdealLattice::enumerate(&r, &Caps::default()).unwrap();
        let p = l.get(i % l.len());
        let q = l.get(j % l.len());
        let s = p.sum(q).unwrap();
        let m = p.intersect(q).unwrap();
        prop_assert!(l.index_of_mask(s.mask()).is_some());
        prop_assert!(l.index_of_mask(m.mask()).is_some());
        // Ideals of Zn are its cyclic subgroups, determined by their orders.
        let a = p.len() as u64;
        let b = q.len() as u64;
        prop_assert_eq!(s.len() as u64, a * b / gcd(a, b));
        prop_assert_eq!(m.len() as u64, gcd(a, b));
    }
}
