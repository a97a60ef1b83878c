//! Ideals as sorted element sets, with the arithmetic the classifiers use.

mod lattice;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

pub use lattice::{is_quasi_local, is_reduced, jacobson, maximal_ideals, IdealLattice};

use crate::dsl::{ideal_lit_text, ElemLit};
use crate::error::{Error, Result};
use crate::ring::FiniteRing;

/// An ideal of a [`FiniteRing`].
///
/// Equality is element-set equality within the same ring; the generator list
/// is informational.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<FiniteRing>,
    elements: Vec<u32>,
    mask: Vec<bool>,
    generators: Vec<usize>,
}

/// Additive subgroup under construction: membership mask plus element list.
pub(crate) struct Closure<'r> {
    ring: &'r FiniteRing,
    mask: Vec<bool>,
    list: Vec<usize>,
}

impl<'r> Closure<'r> {
    pub(crate) fn zero(ring: &'r FiniteRing) -> Self {
        let mut mask = vec![false; ring.size()];
        mask[ring.zero()] = true;
        Closure {
            ring,
            mask,
            list: vec![ring.zero()],
        }
    }

    pub(crate) fn from_ideal(ideal: &Ideal) -> Closure<'_> {
        Closure {
            ring: &ideal.ring,
            mask: ideal.mask.clone(),
            list: ideal.elements().collect(),
        }
    }

    #[inline]
    pub(crate) fn contains(&self, a: usize) -> bool {
        self.mask[a]
    }

    /// Adds the cyclic subgroup generated by `t`: the union of the cosets
    /// `C + kt` for `k` below the first multiple of `t` already in `C`.
    pub(crate) fn absorb(&mut self, t: usize) {
        if self.mask[t] {
            return;
        }
        let base_len = self.list.len();
        let mut shift = t;
        while !self.mask[shift] {
            for i in 0..base_len {
                let e = self.ring.add(self.list[i], shift);
                self.mask[e] = true;
                self.list.push(e);
            }
            shift = self.ring.add(shift, t);
        }
    }

    /// Adds the principal ideal `Rg`.
    pub(crate) fn absorb_principal(&mut self, g: usize) {
        if self.mask[g] {
            return;
        }
        for r in self.ring.elements() {
            self.absorb(self.ring.mul(r, g));
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.list.len()
    }

    pub(crate) fn into_sorted(self) -> (Vec<u32>, Vec<bool>) {
        let mut elems: Vec<u32> = self.list.into_iter().map(|e| e as u32).collect();
        elems.sort_unstable();
        (elems, self.mask)
    }
}

impl Ideal {
    fn from_closure(ring: &Arc<FiniteRing>, c: Closure<'_>, generators: Vec<usize>) -> Ideal {
        let (elements, mask) = c.into_sorted();
        Ideal {
            ring: Arc::clone(ring),
            elements,
            mask,
            generators,
        }
    }

    /// Trusted constructor for sets already known to be ideals.
    pub(crate) fn from_sorted_unchecked(ring: &Arc<FiniteRing>, elems: Vec<usize>) -> Ideal {
        let mut mask = vec![false; ring.size()];
        for &e in &elems {
            mask[e] = true;
        }
        let mut ideal = Ideal {
            ring: Arc::clone(ring),
            elements: elems.into_iter().map(|e| e as u32).collect(),
            mask,
            generators: Vec::new(),
        };
        debug_assert!(ideal.elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(ideal.verify().is_ok(), "{:?}", ideal.verify());
        ideal.generators = ideal.canonical_generators();
        ideal
    }

    fn from_mask_unchecked(ring: &Arc<FiniteRing>, mask: Vec<bool>) -> Ideal {
        let elems = (0..ring.size()).filter(|&e| mask[e]).collect();
        Ideal::from_sorted_unchecked(ring, elems)
    }

    /// Least ideal containing `gens`.
    pub fn generated(ring: &Arc<FiniteRing>, gens: &[usize]) -> Result<Ideal> {
        let mut c = Closure::zero(ring);
        for &g in gens {
            ring.check_element(g)?;
            c.absorb_principal(g);
        }
        Ok(Ideal::from_closure(ring, c, gens.to_vec()))
    }

    pub fn zero(ring: &Arc<FiniteRing>) -> Ideal {
        Ideal::from_closure(ring, Closure::zero(ring), Vec::new())
    }

    pub fn whole(ring: &Arc<FiniteRing>) -> Ideal {
        Ideal::generated(ring, &[ring.one()]).expect("one is in range")
    }

    /// Checked constructor from an explicit element set.
    pub fn from_elements(ring: &Arc<FiniteRing>, elems: &[usize]) -> Result<Ideal> {
        let mut sorted = elems.to_vec();
        for &e in &sorted {
            ring.check_element(e)?;
        }
        sorted.sort_unstable();
        sorted.dedup();
        let mut mask = vec![false; ring.size()];
        for &e in &sorted {
            mask[e] = true;
        }
        let mut ideal = Ideal {
            ring: Arc::clone(ring),
            elements: sorted.into_iter().map(|e| e as u32).collect(),
            mask,
            generators: Vec::new(),
        };
        ideal.verify()?;
        ideal.generators = ideal.canonical_generators();
        Ok(ideal)
    }

    /// Exhaustive ideal check: contains zero, closed under `+` and under
    /// multiplication by every ring element.
    pub fn verify(&self) -> Result<()> {
        let r = &self.ring;
        if !self.mask[r.zero()] {
            return Err(Error::NotAnIdeal("missing zero".into()));
        }
        for a in self.elements() {
            for b in self.elements() {
                if !self.mask[r.add(a, b)] {
                    return Err(Error::NotAnIdeal(format!("{a} + {b} escapes")));
                }
            }
            for x in r.elements() {
                if !self.mask[r.mul(x, a)] {
                    return Err(Error::NotAnIdeal(format!("{x} * {a} escapes")));
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        self.mask[a]
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.elements.iter().map(|&e| e as usize)
    }

    pub(crate) fn elements_u32(&self) -> &[u32] {
        &self.elements
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_proper(&self) -> bool {
        self.len() < self.ring.size()
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.len() <= other.len() && self.elements().all(|e| other.contains(e))
    }

    /// Greedy minimal generating list: elements in index order, keeping each
    /// one not already in the ideal generated by the kept ones.
    pub fn canonical_generators(&self) -> Vec<usize> {
        let mut c = Closure::zero(&self.ring);
        let mut gens = Vec::new();
        for e in self.elements() {
            if !c.contains(e) {
                gens.push(e);
                c.absorb_principal(e);
                if c.len() == self.len() {
                    break;
                }
            }
        }
        gens
    }

    pub fn generator_literals(&self) -> Vec<ElemLit> {
        self.canonical_generators()
            .into_iter()
            .map(|g| self.ring.literal(g))
            .collect()
    }

    /// Canonical ideal literal, e.g. `(4)`; the zero ideal prints as `(0)`.
    pub fn to_literal_text(&self) -> String {
        let gens = self.generator_literals();
        if gens.is_empty() {
            ideal_lit_text(&[self.ring.literal(self.ring.zero())])
        } else {
            ideal_lit_text(&gens)
        }
    }

    /// Generators rendered with [`FiniteRing::display_element`].
    pub fn display_label(&self) -> String {
        let gens = self.canonical_generators();
        let parts: Vec<String> = if gens.is_empty() {
            vec![self.ring.display_element(self.ring.zero())]
        } else {
            gens.iter().map(|&g| self.ring.display_element(g)).collect()
        };
        format!("({})", parts.join(","))
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut c = Closure::from_ideal(self);
        for e in other.elements() {
            c.absorb(e);
        }
        let mut gens = self.generators.clone();
        gens.extend_from_slice(&other.generators);
        Ok(Ideal::from_closure(&self.ring, c, gens))
    }

    /// `IJ`: the ideal generated by all products `ij`.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let r = &self.ring;
        let mut c = Closure::zero(r);
        // The set {ij} is closed under multiplication by ring elements, so its
        // additive closure is already an ideal.
        for i in self.elements() {
            for j in other.elements() {
                c.absorb(r.mul(i, j));
            }
        }
        let mut ideal = Ideal::from_closure(r, c, Vec::new());
        ideal.generators = ideal.canonical_generators();
        Ok(ideal)
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mask = self.mask.iter().zip(&other.mask).map(|(a, b)| *a && *b).collect();
        Ok(Ideal::from_mask_unchecked(&self.ring, mask))
    }

    /// `I^k`, with `I^0` the whole ring.
    pub fn power(&self, k: usize) -> Ideal {
        let mut acc = Ideal::whole(&self.ring);
        for _ in 0..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// `(P : x) = {a | ax ∈ P}`.
    pub fn colon_element(&self, x: usize) -> Result<Ideal> {
        self.ring.check_element(x)?;
        let r = &self.ring;
        let mask = r.elements().map(|a| self.mask[r.mul(a, x)]).collect();
        Ok(Ideal::from_mask_unchecked(r, mask))
    }

    /// `(P : J) = {a | aJ ⊆ P}`.
    pub fn colon(&self, j: &Ideal) -> Result<Ideal> {
        self.same_ring(j)?;
        let r = &self.ring;
        let mask = r
            .elements()
            .map(|a| j.elements().all(|b| self.mask[r.mul(a, b)]))
            .collect();
        Ok(Ideal::from_mask_unchecked(r, mask))
    }

    /// `(0 : x)`.
    pub fn annihilator(ring: &Arc<FiniteRing>, x: usize) -> Result<Ideal> {
        Ideal::zero(ring).colon_element(x)
    }

    /// `(0 : I)`.
    pub fn annihilator_of(&self) -> Ideal {
        Ideal::zero(&self.ring).colon(self).expect("same ring")
    }

    /// `{a | a^k ∈ P for some 1 ≤ k ≤ |A|}`.
    pub fn radical(&self) -> Ideal {
        let r = &self.ring;
        let mask = r
            .elements()
            .map(|a| {
                let mut p = a;
                for _ in 0..r.size() {
                    if self.mask[p] {
                        return true;
                    }
                    p = r.mul(p, a);
                }
                false
            })
            .collect();
        Ideal::from_mask_unchecked(r, mask)
    }

    /// The image `xI = {xi | i ∈ I}`, itself an ideal.
    pub fn scaled(&self, x: usize) -> Ideal {
        let r = &self.ring;
        let mut mask = vec![false; r.size()];
        for i in self.elements() {
            mask[r.mul(x, i)] = true;
        }
        Ideal::from_mask_unchecked(r, mask)
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.elements == other.elements
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lattice order: size first, then lexicographic by elements.
impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {} {:?}", self.display_label(), self.ring.expr(), self.elements)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_label())
    }
}
