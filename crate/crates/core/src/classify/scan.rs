//! Exhaustive scans. Outer loops run over `x` in ascending order and the
//! first hit per `x` is the least one, so `find_map_first` keeps the
//! lexicographically least witness under any partitioning.

use rayon::prelude::*;

use super::{TripleZeroWitness, Verdict, Witness};
use crate::ideal::Ideal;
use crate::ring::FiniteRing;

const PARALLEL_FROM: usize = 96;

pub(super) struct Scan<'a> {
    ring: &'a FiniteRing,
    mask: &'a [bool],
    n: usize,
    mul: &'a [u32],
    zero: usize,
}

impl<'a> Scan<'a> {
    pub(super) fn new(p: &'a Ideal) -> Self {
        let ring: &FiniteRing = p.ring();
        Scan {
            ring,
            mask: p.mask(),
            n: ring.size(),
            mul: ring.mul_table(),
            zero: ring.zero(),
        }
    }

    #[inline]
    fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    fn first<F>(&self, outer: &[usize], f: F) -> Option<Witness>
    where
        F: Fn(usize) -> Option<Witness> + Sync,
    {
        if self.n >= PARALLEL_FROM {
            outer.par_iter().find_map_first(|&x| f(x))
        } else {
            outer.iter().find_map(|&x| f(x))
        }
    }

    fn verdict(w: Option<Witness>) -> Verdict {
        w.map_or(Verdict::Holds, Verdict::Fails)
    }

    /// Least `(x, y)` with `xy ∈ P`, `x, y ∉ P` (and `xy ≠ 0` when weak).
    pub(super) fn prime(&self, weak: bool) -> Verdict {
        let outer: Vec<usize> = (0..self.n).filter(|&x| !self.mask[x]).collect();
        Self::verdict(self.first(&outer, |x| {
            (0..self.n).find_map(|y| {
                let w = self.m(x, y);
                (!self.mask[y] && self.mask[w] && !(weak && w == self.zero)).then_some(Witness::Pair(x, y))
            })
        }))
    }

    /// For each `w`, the ascending list of `z` with `wz ∈ P` (and `wz ≠ 0`
    /// when weak), in CSR form.
    fn absorbing_lists(&self, weak: bool, candidates: &[usize]) -> (Vec<u32>, Vec<u32>) {
        let mut start = Vec::with_capacity(self.n + 1);
        let mut items = Vec::new();
        start.push(0);
        for w in 0..self.n {
            for &z in candidates {
                let wz = self.m(w, z);
                if self.mask[wz] && !(weak && wz == self.zero) {
                    items.push(z as u32);
                }
            }
            start.push(items.len() as u32);
        }
        (start, items)
    }

    /// Least `(x, y, z)` over all elements with `xyz ∈ P` and none of
    /// `xy, xz, yz` in `P` (and `xyz ≠ 0` when weak).
    pub(super) fn two_absorbing(&self, weak: bool) -> Verdict {
        let all: Vec<usize> = (0..self.n).collect();
        let outside: Vec<usize> = all.iter().copied().filter(|&z| !self.mask[z]).collect();
        // z ∈ P would put xz in P, so only z ∉ P can appear in a witness;
        // likewise for x and y.
        let (start, items) = self.absorbing_lists(weak, &outside);
        Self::verdict(self.first(&outside, |x| {
            outside.iter().find_map(|&y| {
                let w = self.m(x, y);
                if self.mask[w] {
                    return None;
                }
                items[start[w] as usize..start[w + 1] as usize]
                    .iter()
                    .map(|&z| z as usize)
                    .find(|&z| !self.mask[self.m(x, z)] && !self.mask[self.m(y, z)])
                    .map(|z| Witness::Triple(x, y, z))
            })
        }))
    }

    /// Least nonunit `(x, y, z)` with `xyz ∈ P`, `xy ∉ P`, `z ∉ P` (and
    /// `xyz ≠ 0` when weak). Whether some `z` completes `(x, y)` depends
    /// only on `w = xy`, so the least such `z` is memoized per `w`.
    pub(super) fn one_absorbing(&self, weak: bool) -> Verdict {
        let nonunits = self.ring.nonunits();
        let zs: Vec<usize> = nonunits.iter().copied().filter(|&z| !self.mask[z]).collect();
        let least_z: Vec<Option<usize>> = (0..self.n)
            .map(|w| {
                zs.iter().copied().find(|&z| {
                    let wz = self.m(w, z);
                    self.mask[wz] && !(weak && wz == self.zero)
                })
            })
            .collect();
        Self::verdict(self.first(nonunits, |x| {
            nonunits.iter().find_map(|&y| {
                let w = self.m(x, y);
                if self.mask[w] {
                    return None;
                }
                least_z[w].map(|z| Witness::Triple(x, y, z))
            })
        }))
    }

    /// Every nonunit `(x, y, z)` with `xyz = 0`, `xy ∉ P`, `z ∉ P`.
    pub(super) fn triple_zeros(&self) -> Vec<TripleZeroWitness> {
        let nonunits = self.ring.nonunits();
        let zs: Vec<usize> = nonunits.iter().copied().filter(|&z| !self.mask[z]).collect();
        let mut out = Vec::new();
        for &x in nonunits {
            for &y in nonunits {
                let w = self.m(x, y);
                if self.mask[w] {
                    continue;
                }
                for &z in &zs {
                    if self.m(w, z) == self.zero {
                        out.push(TripleZeroWitness { x, y, z });
                    }
                }
            }
        }
        out
    }
}
