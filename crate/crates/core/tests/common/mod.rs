//! Definitional oracles: straight triple loops over the multiplication table,
//! with no memoization or candidate pruning.

#![allow(dead_code)]

use std::sync::Arc;

use idealis_core::{dsl, Caps, FiniteRing, Ideal, Property, Witness};

pub fn ring(text: &str) -> Arc<FiniteRing> {
    dsl::build_ring(text, &Caps::default()).unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub fn ideal(r: &Arc<FiniteRing>, text: &str) -> Ideal {
    dsl::parse_ideal(text, r).unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Lex-least violating tuple for `prop`, or `None` when it holds.
pub fn naive_witness(prop: Property, p: &Ideal) -> Option<Witness> {
    let r = p.ring();
    let n = r.size();
    let inp = |a: usize| p.contains(a);
    let zero = r.zero();
    let nonunit = |a: usize| !r.is_unit(a);
    match prop {
        Property::Prime | Property::WeaklyPrime => {
            let weak = prop == Property::WeaklyPrime;
            for x in 0..n {
                for y in 0..n {
                    let xy = r.mul(x, y);
                    if inp(xy) && !(weak && xy == zero) && !inp(x) && !inp(y) {
                        return Some(Witness::Pair(x, y));
                    }
                }
            }
            None
        }
        Property::OneAbsorbingPrime | Property::WeaklyOneAbsorbingPrime => {
            let weak = prop == Property::WeaklyOneAbsorbingPrime;
            for x in (0..n).filter(|&a| nonunit(a)) {
                for y in (0..n).filter(|&a| nonunit(a)) {
                    for z in (0..n).filter(|&a| nonunit(a)) {
                        let xyz = r.mul(r.mul(x, y), z);
                        if inp(xyz) && !(weak && xyz == zero) && !inp(r.mul(x, y)) && !inp(z) {
                            return Some(Witness::Triple(x, y, z));
                        }
                    }
                }
            }
            None
        }
        Property::TwoAbsorbing | Property::WeaklyTwoAbsorbing => {
            let weak = prop == Property::WeaklyTwoAbsorbing;
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let xyz = r.mul(r.mul(x, y), z);
                        if inp(xyz)
                            && !(weak && xyz == zero)
                            && !inp(r.mul(x, y))
                            && !inp(r.mul(x, z))
                            && !inp(r.mul(y, z))
                        {
                            return Some(Witness::Triple(x, y, z));
                        }
                    }
                }
            }
            None
        }
    }
}

/// Every ideal by brute force: principal ideals, then closures of pairwise
/// unions until nothing new appears.
pub fn naive_ideal_sets(r: &FiniteRing) -> Vec<Vec<bool>> {
    let n = r.size();
    let close = |seed: Vec<bool>| {
        let mut m = seed;
        m[r.zero()] = true;
        loop {
            let members: Vec<usize> = (0..n).filter(|&a| m[a]).collect();
            let mut grew = false;
            for &a in &members {
                for b in 0..n {
                    let prod = r.mul(a, b);
                    if !m[prod] {
                        m[prod] = true;
                        grew = true;
                    }
                    if m[b] {
                        let s = r.add(a, b);
                        if !m[s] {
                            m[s] = true;
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                return m;
            }
        }
    };
    let mut out: Vec<Vec<bool>> = Vec::new();
    for a in 0..n {
        let mut seed = vec![false; n];
        seed[a] = true;
        let m = close(seed);
        if !out.contains(&m) {
            out.push(m);
        }
    }
    loop {
        let mut fresh = Vec::new();
        for i in 0..out.len() {
            for j in i + 1..out.len() {
                let seed: Vec<bool> = (0..n).map(|k| out[i][k] || out[j][k]).collect();
                let m = close(seed);
                if !out.contains(&m) && !fresh.contains(&m) {
                    fresh.push(m);
                }
            }
        }
        if fresh.is_empty() {
            return out;
        }
        out.extend(fresh);
    }
}
