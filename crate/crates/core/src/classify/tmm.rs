//! Six equivalent characterizations of weakly 1-absorbing prime ideals,
//! each evaluated on its own terms so they can cross-check one another.

use std::collections::BTreeSet;

use super::{is_weakly_one_absorbing_prime, Error, Result};
use crate::caps::Caps;
use crate::ideal::{Ideal, IdealLattice};

/// Verdicts of conditions (i) through (vi), in order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TmmConditions(pub [bool; 6]);

impl TmmConditions {
    pub fn get(&self, i: usize) -> bool {
        self.0[i - 1]
    }

    pub fn all_agree(&self) -> bool {
        self.0.iter().all(|&c| c == self.0[0])
    }
}

/// Lattice plus its product table, shared across ideals of one ring.
pub struct TmmContext<'l> {
    lattice: &'l IdealLattice,
    products: Vec<usize>,
    proper: Vec<usize>,
}

impl<'l> TmmContext<'l> {
    pub fn new(lattice: &'l IdealLattice) -> Self {
        let proper = lattice.proper().map(|(i, _)| i).collect();
        TmmContext {
            lattice,
            products: lattice.product_table(),
            proper,
        }
    }

    fn prod(&self, i: usize, j: usize) -> usize {
        self.products[i * self.lattice.len() + j]
    }
}

pub fn tmm_characterize(p: &Ideal, caps: &Caps) -> Result<TmmConditions> {
    let lattice = IdealLattice::enumerate(p.ring(), caps)?;
    tmm_characterize_with(p, &TmmContext::new(&lattice))
}

pub fn tmm_characterize_with(p: &Ideal, ctx: &TmmContext<'_>) -> Result<TmmConditions> {
    if !p.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    if ctx.lattice.index_of(p).is_none() {
        return Err(Error::RingMismatch);
    }
    let r = p.ring();
    let n = r.size();
    let pm = p.mask();
    let zero = r.zero();
    let nonunits = r.nonunits();

    // Products xy of nonunits with xy ∉ P; conditions (ii)-(iv) depend on xy only.
    let ws: BTreeSet<usize> = nonunits
        .iter()
        .flat_map(|&x| nonunits.iter().map(move |&y| r.mul(x, y)))
        .filter(|&w| !pm[w])
        .collect();

    let i = is_weakly_one_absorbing_prime(p)?.holds();

    let mut ii = true;
    let mut iii = true;
    let mut iv = true;
    for &w in &ws {
        let colon: Vec<bool> = (0..n).map(|a| pm[r.mul(w, a)]).collect();
        let ann: Vec<bool> = (0..n).map(|a| r.mul(w, a) == zero).collect();
        ii &= (0..n).all(|a| colon[a] == (pm[a] || ann[a]));
        iii &= colon.as_slice() == pm || colon == ann;
        for &j in &ctx.proper {
            let jd = ctx.lattice.get(j);
            let inside = jd.elements().all(|e| colon[e]);
            let nonzero = jd.elements().any(|e| !ann[e]);
            if inside && nonzero && !jd.is_subset_of(p) {
                iv = false;
            }
        }
    }

    let len = ctx.lattice.len();
    let sub = |mask: &[bool], k: usize| ctx.lattice.get(k).elements().all(|e| mask[e]);
    let in_p: Vec<bool> = (0..len).map(|k| sub(pm, k)).collect();
    let zero_idx = ctx.lattice.zero_index();

    let mut v = true;
    for &x in nonunits {
        let colon: Vec<bool> = (0..n).map(|a| pm[r.mul(x, a)]).collect();
        let ann: Vec<bool> = (0..n).map(|a| r.mul(x, a) == zero).collect();
        let in_colon: Vec<bool> = (0..len).map(|k| sub(&colon, k)).collect();
        let in_ann: Vec<bool> = (0..len).map(|k| sub(&ann, k)).collect();
        'pairs: for &a in &ctx.proper {
            for &b in &ctx.proper {
                let k = ctx.prod(a, b);
                if in_colon[k] && !in_ann[k] && !in_colon[a] && !in_p[b] {
                    v = false;
                    break 'pairs;
                }
            }
        }
        if !v {
            break;
        }
    }

    let mut vi = true;
    'triples: for &a in &ctx.proper {
        for &b in &ctx.proper {
            let ab = ctx.prod(a, b);
            for &c in &ctx.proper {
                let abc = ctx.prod(ab, c);
                if abc != zero_idx && in_p[abc] && !in_p[ab] && !in_p[c] {
                    vi = false;
                    break 'triples;
                }
            }
        }
    }

    Ok(TmmConditions([i, ii, iii, iv, v, vi]))
}
