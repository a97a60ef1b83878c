//! Backtracking search for ring isomorphisms between small rings.

use std::sync::Arc;

use super::axioms::additive_generators;
use super::{FiniteRing, Homomorphism};
use crate::caps::Caps;
use crate::error::{Error, Result};

fn additive_orders(r: &FiniteRing) -> Vec<usize> {
    r.elements()
        .map(|a| {
            let mut k = 1;
            let mut acc = a;
            while acc != r.zero() {
                acc = r.add(acc, a);
                k += 1;
            }
            k
        })
        .collect()
}

struct Search<'a> {
    from: &'a FiniteRing,
    to: &'a FiniteRing,
    gens: Vec<usize>,
    from_orders: Vec<usize>,
    to_orders: Vec<usize>,
}

const UNSET: usize = usize::MAX;

impl Search<'_> {
    /// Extends the additive map determined by the images of `gens[..k]` to
    /// the subgroup they generate; `None` on any inconsistency.
    fn extend(&self, images: &[usize]) -> Option<Vec<usize>> {
        let (f, t) = (self.from, self.to);
        let mut map = vec![UNSET; f.size()];
        let mut used = vec![false; t.size()];
        map[f.zero()] = t.zero();
        used[t.zero()] = true;
        let mut queue = vec![f.zero()];
        let mut i = 0;
        while i < queue.len() {
            let h = queue[i];
            i += 1;
            for (g, &img) in self.gens.iter().zip(images) {
                let e = f.add(h, *g);
                let v = t.add(map[h], img);
                if map[e] == UNSET {
                    if used[v] {
                        return None;
                    }
                    map[e] = v;
                    used[v] = true;
                    queue.push(e);
                } else if map[e] != v {
                    return None;
                }
            }
        }
        // Multiplicative and unit constraints inside the reached subgroup.
        for &a in &queue {
            if f.is_unit(a) != t.is_unit(map[a]) {
                return None;
            }
            for &b in &queue {
                let ab = f.mul(a, b);
                if map[ab] != UNSET && map[ab] != t.mul(map[a], map[b]) {
                    return None;
                }
            }
        }
        if map[f.one()] != UNSET && map[f.one()] != t.one() {
            return None;
        }
        Some(map)
    }

    fn dfs(&self, images: &mut Vec<usize>) -> Option<Vec<usize>> {
        if images.len() == self.gens.len() {
            return self.extend(images);
        }
        let g = self.gens[images.len()];
        for v in self.to.elements() {
            if self.to_orders[v] != self.from_orders[g] || self.to.is_unit(v) != self.from.is_unit(g) {
                continue;
            }
            images.push(v);
            if self.extend(images).is_some() {
                if let Some(m) = self.dfs(images) {
                    return Some(m);
                }
            }
            images.pop();
        }
        None
    }
}

/// Finds a ring isomorphism `a → b`, or `None` when the rings are not
/// isomorphic. Generator images are tried in increasing index order, so the
/// result is the first isomorphism in lexicographic order of the images of
/// the greedy additive generators of `a`.
pub fn isomorphism_search(a: &Arc<FiniteRing>, b: &Arc<FiniteRing>, caps: &Caps) -> Result<Option<Homomorphism>> {
    for r in [a, b] {
        if r.size() > caps.iso_search {
            return Err(Error::SearchCapExceeded {
                size: r.size(),
                cap: caps.iso_search,
            });
        }
    }
    if a.size() != b.size() || a.units().len() != b.units().len() {
        return Ok(None);
    }
    let from_orders = additive_orders(a);
    let to_orders = additive_orders(b);
    let mut x = from_orders.clone();
    let mut y = to_orders.clone();
    x.sort_unstable();
    y.sort_unstable();
    if x != y {
        return Ok(None);
    }
    let gens = additive_generators(a.size(), a.zero(), &|p, q| a.add(p, q));
    let search = Search {
        from: a,
        to: b,
        gens,
        from_orders,
        to_orders,
    };
    match search.dfs(&mut Vec::new()) {
        Some(map) => Homomorphism::new(Arc::clone(a), Arc::clone(b), map).map(Some),
        None => Ok(None),
    }
}
