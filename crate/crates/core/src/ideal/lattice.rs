use std::collections::HashMap;
use std::sync::Arc;

use super::{Closure, Ideal};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ring::FiniteRing;

/// Every ideal of a ring, sorted by `(size, elements)`.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    ring: Arc<FiniteRing>,
    ideals: Vec<Ideal>,
    maximal: Vec<usize>,
    index: HashMap<Vec<u32>, usize>,
}

impl IdealLattice {
    /// Enumerates the lattice as the join-closure of the principal ideals.
    ///
    /// Every ideal of a finite ring is a finite sum of principal ideals, so a
    /// worklist that adds one principal ideal at a time reaches all of them.
    pub fn enumerate(ring: &Arc<FiniteRing>, caps: &Caps) -> Result<Self> {
        let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut ideals: Vec<Ideal> = Vec::new();
        let mut principal_gens: Vec<usize> = Vec::new();

        let push = |ideal: Ideal, seen: &mut HashMap<Vec<u32>, usize>, ideals: &mut Vec<Ideal>| -> Result<bool> {
            if seen.contains_key(&ideal.elements) {
                return Ok(false);
            }
            if ideals.len() >= caps.ideals {
                return Err(Error::LatticeCapExceeded { cap: caps.ideals });
            }
            seen.insert(ideal.elements.clone(), ideals.len());
            ideals.push(ideal);
            Ok(true)
        };

        push(Ideal::zero(ring), &mut seen, &mut ideals)?;
        for a in ring.elements() {
            let mut c = Closure::zero(ring);
            c.absorb_principal(a);
            let ideal = Ideal::from_closure(ring, c, vec![a]);
            if push(ideal, &mut seen, &mut ideals)? {
                principal_gens.push(a);
            }
        }

        let mut next = 0;
        while next < ideals.len() {
            for &g in &principal_gens {
                if ideals[next].contains(g) {
                    continue;
                }
                let mut c = Closure::from_ideal(&ideals[next]);
                c.absorb_principal(g);
                let mut gens = ideals[next].generators.clone();
                gens.push(g);
                let sum = Ideal::from_closure(ring, c, gens);
                push(sum, &mut seen, &mut ideals)?;
            }
            next += 1;
        }

        ideals.sort();
        for ideal in &mut ideals {
            ideal.generators = ideal.canonical_generators();
        }
        let index: HashMap<Vec<u32>, usize> = ideals
            .iter()
            .enumerate()
            .map(|(i, id)| (id.elements.clone(), i))
            .collect();
        let proper: Vec<usize> = (0..ideals.len()).filter(|&i| ideals[i].is_proper()).collect();
        let maximal = proper
            .iter()
            .copied()
            .filter(|&i| {
                !proper
                    .iter()
                    .any(|&j| j != i && ideals[i].len() < ideals[j].len() && ideals[i].is_subset_of(&ideals[j]))
            })
            .collect();
        Ok(IdealLattice {
            ring: Arc::clone(ring),
            ideals,
            maximal,
            index,
        })
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn get(&self, i: usize) -> &Ideal {
        &self.ideals[i]
    }

    /// Proper ideals with their lattice indices.
    pub fn proper(&self) -> impl Iterator<Item = (usize, &Ideal)> {
        self.ideals.iter().enumerate().filter(|(_, i)| i.is_proper())
    }

    pub fn index_of(&self, ideal: &Ideal) -> Option<usize> {
        if !Arc::ptr_eq(ideal.ring(), &self.ring) {
            return None;
        }
        self.index.get(&ideal.elements).copied()
    }

    /// Index of the ideal with exactly these elements.
    pub fn index_of_mask(&self, mask: &[bool]) -> Option<usize> {
        let key: Vec<u32> = (0..mask.len()).filter(|&e| mask[e]).map(|e| e as u32).collect();
        self.index.get(&key).copied()
    }

    pub fn zero_index(&self) -> usize {
        0
    }

    pub fn whole_index(&self) -> usize {
        self.ideals.len() - 1
    }

    pub fn maximal_indices(&self) -> &[usize] {
        &self.maximal
    }

    pub fn maximal_ideals(&self) -> Vec<&Ideal> {
        self.maximal.iter().map(|&i| &self.ideals[i]).collect()
    }

    pub fn jacobson(&self) -> Ideal {
        let mut acc = Ideal::whole(&self.ring);
        for &m in &self.maximal {
            acc = acc.intersect(&self.ideals[m]).expect("same ring");
        }
        acc
    }

    pub fn is_quasi_local(&self) -> bool {
        self.maximal.len() == 1
    }

    /// Products of all pairs of lattice members: entry `i * len() + j` is the
    /// index of `I_i I_j`, computed from generator products.
    pub fn product_table(&self) -> Vec<usize> {
        let n = self.ideals.len();
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in i..n {
                let mut c = Closure::zero(&self.ring);
                for &g in &self.ideals[i].generators {
                    for &h in &self.ideals[j].generators {
                        c.absorb_principal(self.ring.mul(g, h));
                    }
                }
                let (elems, _) = c.into_sorted();
                let k = self.index[&elems];
                table[i * n + j] = k;
                table[j * n + i] = k;
            }
        }
        table
    }

    /// Hasse diagram edges `(lower, upper)`: strict containment with nothing
    /// strictly between.
    pub fn covering_edges(&self) -> Vec<(usize, usize)> {
        let n = self.ideals.len();
        let below: Vec<Vec<bool>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        self.ideals[i].len() < self.ideals[j].len() && self.ideals[i].is_subset_of(&self.ideals[j])
                    })
                    .collect()
            })
            .collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if below[i][j] && !(0..n).any(|k| below[i][k] && below[k][j]) {
                    edges.push((i, j));
                }
            }
        }
        edges
    }
}

pub fn jacobson(ring: &Arc<FiniteRing>, caps: &Caps) -> Result<Ideal> {
    Ok(IdealLattice::enumerate(ring, caps)?.jacobson())
}

pub fn maximal_ideals(ring: &Arc<FiniteRing>, caps: &Caps) -> Result<Vec<Ideal>> {
    let lattice = IdealLattice::enumerate(ring, caps)?;
    Ok(lattice.maximal_ideals().into_iter().cloned().collect())
}

/// No nonzero nilpotents, i.e. `√(0) = (0)`.
pub fn is_reduced(ring: &Arc<FiniteRing>) -> bool {
    Ideal::zero(ring).radical().is_zero()
}

pub fn is_quasi_local(ring: &Arc<FiniteRing>, caps: &Caps) -> Result<bool> {
    Ok(IdealLattice::enumerate(ring, caps)?.is_quasi_local())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{local_algebra, product, zn};

    fn c() -> Caps {
        Caps::default()
    }

    fn divisor_count(n: u64) -> usize {
        (1..=n).filter(|d| n % d == 0).count()
    }

    #[test]
    fn zn_lattice_sizes_match_divisor_counts() {
        for n in 2..=200 {
            let r = zn(n, &c()).unwrap();
            let l = IdealLattice::enumerate(&r, &c()).unwrap();
            assert_eq!(l.len(), divisor_count(n), "Z{n}");
        }
    }

    #[test]
    fn z12_lattice() {
        let r = zn(12, &c()).unwrap();
        let l = IdealLattice::enumerate(&r, &c()).unwrap();
        let labels: Vec<String> = l.ideals().iter().map(|i| i.to_literal_text()).collect();
        assert_eq!(labels, ["(0)", "(6)", "(4)", "(3)", "(2)", "(1)"]);
        assert_eq!(l.covering_edges().len(), 7);
        assert!(!l.is_quasi_local());
        let max: Vec<String> = l.maximal_ideals().iter().map(|i| i.to_literal_text()).collect();
        assert_eq!(max, ["(3)", "(2)"]);
    }

    #[test]
    fn jacobson_examples() {
        let z8 = zn(8, &c()).unwrap();
        assert_eq!(jacobson(&z8, &c()).unwrap(), Ideal::generated(&z8, &[2]).unwrap());
        let p = product(&zn(2, &c()).unwrap(), &zn(3, &c()).unwrap(), &c()).unwrap();
        assert!(jacobson(&p, &c()).unwrap().is_zero());
        assert!(is_quasi_local(&z8, &c()).unwrap());
        assert!(!is_reduced(&zn(12, &c()).unwrap()));
        assert!(is_reduced(&zn(30, &c()).unwrap()));
    }

    #[test]
    fn local_algebra_lattice() {
        let a = local_algebra(2, &c()).unwrap();
        let l = IdealLattice::enumerate(&a, &c()).unwrap();
        let labels: Vec<String> = l.ideals().iter().map(|i| i.display_label()).collect();
        for want in ["(0)", "(x)", "(y)", "(x+y)", "(x,y)", "(1)"] {
            assert!(labels.iter().any(|l| l == want), "{want} missing from {labels:?}");
        }
        assert_eq!(l.len(), 6);
        assert!(l.is_quasi_local());
        let a3 = local_algebra(3, &c()).unwrap();
        // Zero, four lines in the maximal ideal, the maximal ideal, the ring.
        assert_eq!(IdealLattice::enumerate(&a3, &c()).unwrap().len(), 7);
    }

    #[test]
    fn product_table_matches_pairwise_products() {
        for text in [12u64, 36, 64] {
            let r = zn(text, &c()).unwrap();
            let l = IdealLattice::enumerate(&r, &c()).unwrap();
            let t = l.product_table();
            for i in 0..l.len() {
                for j in 0..l.len() {
                    let direct = l.get(i).product(l.get(j)).unwrap();
                    assert_eq!(l.get(t[i * l.len() + j]), &direct);
                }
            }
        }
    }

    #[test]
    fn lattice_cap() {
        let r = zn(12, &c()).unwrap();
        let tight = Caps { ideals: 4, ..c() };
        assert_eq!(
            IdealLattice::enumerate(&r, &tight).unwrap_err(),
            Error::LatticeCapExceeded { cap: 4 }
        );
    }
}
