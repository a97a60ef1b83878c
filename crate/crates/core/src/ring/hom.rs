use std::sync::Arc;

use super::FiniteRing;
use crate::error::{Error, Result};
use crate::ideal::Ideal;

/// A unital ring homomorphism, verified pointwise on construction.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source: Arc<FiniteRing>,
    target: Arc<FiniteRing>,
    map: Vec<u32>,
}

impl Homomorphism {
    pub fn new(source: Arc<FiniteRing>, target: Arc<FiniteRing>, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.size() {
            return Err(Error::NotAHomomorphism(format!(
                "map has {} entries for a ring of {} elements",
                map.len(),
                source.size()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= target.size()) {
            return Err(Error::ElementOutOfRange {
                index: bad,
                size: target.size(),
            });
        }
        if map[source.one()] != target.one() {
            return Err(Error::NotAHomomorphism("identity is not preserved".into()));
        }
        for a in source.elements() {
            for b in a..source.size() {
                if map[source.add(a, b)] != target.add(map[a], map[b]) {
                    return Err(Error::NotAHomomorphism(format!("addition fails at ({a}, {b})")));
                }
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "multiplication fails at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Homomorphism {
            source,
            target,
            map: map.into_iter().map(|v| v as u32).collect(),
        })
    }

    pub fn identity(ring: &Arc<FiniteRing>) -> Self {
        Homomorphism {
            source: Arc::clone(ring),
            target: Arc::clone(ring),
            map: (0..ring.size() as u32).collect(),
        }
    }

    pub fn source(&self) -> &Arc<FiniteRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteRing> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a] as usize
    }

    pub fn table(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v as usize).collect()
    }

    pub fn kernel(&self) -> Ideal {
        let z = self.target.zero();
        let elems: Vec<usize> = self.source.elements().filter(|&a| self.apply(a) == z).collect();
        Ideal::from_sorted_unchecked(&self.source, elems)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v as usize], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        for &v in &self.map {
            seen[v as usize] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// Whether every nonunit of the source maps to a nonunit of the target.
    pub fn preserves_nonunits(&self) -> bool {
        self.source
            .nonunits()
            .iter()
            .all(|&x| !self.target.is_unit(self.apply(x)))
    }

    /// `f⁻¹(P)` for an ideal of the target.
    pub fn preimage(&self, p: &Ideal) -> Result<Ideal> {
        if !Arc::ptr_eq(p.ring(), &self.target) {
            return Err(Error::RingMismatch);
        }
        let elems: Vec<usize> = self.source.elements().filter(|&a| p.contains(self.apply(a))).collect();
        Ok(Ideal::from_sorted_unchecked(&self.source, elems))
    }

    /// The ideal generated by `f(P)`; equal to `f(P)` itself when `f` is onto.
    pub fn image(&self, p: &Ideal) -> Result<Ideal> {
        if !Arc::ptr_eq(p.ring(), &self.source) {
            return Err(Error::RingMismatch);
        }
        let gens: Vec<usize> = p.elements().map(|a| self.apply(a)).collect();
        Ideal::generated(&self.target, &gens)
    }
}
