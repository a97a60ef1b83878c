//! Finite commutative rings with identity as dense operation tables.

mod axioms;
pub(crate) mod construct;
mod hom;
mod iso;

use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::sync::Arc;

pub use construct::{idealization, local_algebra, localization, product, quotient, zn};
pub use hom::Homomorphism;
pub use iso::isomorphism_search;

use crate::dsl::{ElemLit, RingExpr};
use crate::error::{Error, Result};

const NO_INVERSE: u32 = u32::MAX;

/// How a ring was built; used to resolve and print element literals.
#[derive(Clone, Debug)]
pub(crate) enum Structure {
    Cyclic(u64),
    Product {
        left: Arc<FiniteRing>,
        right: Arc<FiniteRing>,
    },
    Quotient {
        parent: Arc<FiniteRing>,
        projection: Vec<u32>,
        reps: Vec<u32>,
    },
    Localization {
        parent: Arc<FiniteRing>,
        canonical: Vec<u32>,
        preimage: Vec<u32>,
    },
    /// Elements are pairs `(a, m)` encoded as `a * module.size() + m`.
    Idealization {
        base: Arc<FiniteRing>,
        module: Arc<FiniteRing>,
        module_projection: Vec<u32>,
    },
    LocalAlgebra(u64),
}

/// A commutative ring with identity on the elements `0..size`.
///
/// Tables are verified against the ring axioms when the ring is built and
/// never change afterwards.
#[derive(Clone)]
pub struct FiniteRing {
    size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
    unit_mask: Vec<bool>,
    inverse: Vec<u32>,
    units: Vec<usize>,
    nonunits: Vec<usize>,
    structure: Structure,
    expr: RingExpr,
}

impl FiniteRing {
    /// Builds a ring from row-major `size × size` tables, checking every axiom.
    pub(crate) fn from_tables(
        size: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        structure: Structure,
        expr: RingExpr,
    ) -> Result<Self> {
        let neg = axioms::verify(size, &add, &mul, zero, one)?;
        let mut ring = FiniteRing {
            size,
            add,
            mul,
            neg,
            zero,
            one,
            unit_mask: Vec::new(),
            inverse: Vec::new(),
            units: Vec::new(),
            nonunits: Vec::new(),
            structure,
            expr,
        };
        ring.compute_units();
        Ok(ring)
    }

    fn compute_units(&mut self) {
        let n = self.size;
        self.inverse = vec![NO_INVERSE; n];
        for a in 0..n {
            if let Some(b) = (0..n).find(|&b| self.mul[a * n + b] as usize == self.one) {
                self.inverse[a] = b as u32;
            }
        }
        self.unit_mask = self.inverse.iter().map(|&b| b != NO_INVERSE).collect();
        self.refresh_unit_lists();
    }

    fn refresh_unit_lists(&mut self) {
        self.units = (0..self.size).filter(|&a| self.unit_mask[a]).collect();
        self.nonunits = (0..self.size).filter(|&a| !self.unit_mask[a]).collect();
    }

    /// Overwrites the cached unit status of one element, breaking the unit
    /// invariant on purpose. Only for fault-injection tests of the harness.
    #[doc(hidden)]
    pub fn inject_unit_fault(&mut self, element: usize, is_unit: bool) {
        self.unit_mask[element] = is_unit;
        self.refresh_unit_lists();
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    /// `a^k` with `a^0 = 1`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.one, |acc, _| self.mul(acc, a))
    }

    /// `k · a` (k-fold sum).
    pub fn scale(&self, k: usize, a: usize) -> usize {
        (0..k).fold(self.zero, |acc, _| self.add(acc, a))
    }

    #[inline]
    pub fn is_unit(&self, a: usize) -> bool {
        self.unit_mask[a]
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        if !self.unit_mask[a] {
            return None;
        }
        match self.inverse[a] {
            NO_INVERSE => None,
            b => Some(b as usize),
        }
    }

    pub fn units(&self) -> &[usize] {
        &self.units
    }

    pub fn nonunits(&self) -> &[usize] {
        &self.nonunits
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn element(&self, index: usize) -> RingElement<'_> {
        assert!(index < self.size, "element {index} out of range");
        RingElement { ring: self, index }
    }

    pub fn check_element(&self, index: usize) -> Result<usize> {
        if index < self.size {
            Ok(index)
        } else {
            Err(Error::ElementOutOfRange {
                index,
                size: self.size,
            })
        }
    }

    pub fn is_field(&self) -> bool {
        self.units.len() == self.size - 1
    }

    /// Elements that are not zero divisors.
    pub fn regular_elements(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&a| (0..self.size).all(|b| b == self.zero || self.mul(a, b) != self.zero))
            .collect()
    }

    pub fn is_nilpotent(&self, a: usize) -> bool {
        let mut p = a;
        for _ in 0..self.size {
            if p == self.zero {
                return true;
            }
            p = self.mul(p, a);
        }
        p == self.zero
    }

    /// Expression this ring was built from.
    pub fn expr(&self) -> &RingExpr {
        &self.expr
    }

    /// `n` when the ring was built as `Zn`.
    pub fn cyclic_modulus(&self) -> Option<u64> {
        match self.structure {
            Structure::Cyclic(n) => Some(n),
            _ => None,
        }
    }

    /// Factors when the ring is a direct product.
    pub fn product_factors(&self) -> Option<(&Arc<FiniteRing>, &Arc<FiniteRing>)> {
        match &self.structure {
            Structure::Product { left, right } => Some((left, right)),
            _ => None,
        }
    }

    /// Resolves an element literal to an index.
    pub fn resolve(&self, lit: &ElemLit) -> Result<usize> {
        let bad = || Error::BadLiteral {
            literal: lit.to_string(),
            ring: self.expr.to_string(),
        };
        match (&self.structure, lit) {
            (Structure::Cyclic(_) | Structure::LocalAlgebra(_), ElemLit::Int(v)) => {
                let index = usize::try_from(*v).unwrap_or(usize::MAX);
                self.check_element(index)
            }
            (Structure::Product { left, right }, ElemLit::Pair(a, b)) => {
                Ok(left.resolve(a)? * right.size() + right.resolve(b)?)
            }
            (Structure::Quotient { parent, projection, .. }, lit) => {
                Ok(projection[parent.resolve(lit)?] as usize)
            }
            (Structure::Localization { parent, canonical, .. }, lit) => {
                Ok(canonical[parent.resolve(lit)?] as usize)
            }
            (
                Structure::Idealization {
                    base,
                    module,
                    module_projection,
                },
                ElemLit::Pair(a, m),
            ) => {
                let a = base.resolve(a)?;
                let m = module_projection[base.resolve(m)?] as usize;
                Ok(a * module.size() + m)
            }
            _ => Err(bad()),
        }
    }

    /// Canonical literal for an element; `resolve(literal(i)) == i`.
    pub fn literal(&self, index: usize) -> ElemLit {
        match &self.structure {
            Structure::Cyclic(_) | Structure::LocalAlgebra(_) => ElemLit::Int(index as u64),
            Structure::Product { left, right } => {
                let r = right.size();
                ElemLit::pair(left.literal(index / r), right.literal(index % r))
            }
            Structure::Quotient { parent, reps, .. } => parent.literal(reps[index] as usize),
            Structure::Localization {
                parent, preimage, ..
            } => parent.literal(preimage[index] as usize),
            Structure::Idealization { base, module, .. } => {
                let m = module.size();
                ElemLit::pair(base.literal(index / m), module.literal(index % m))
            }
        }
    }

    /// Human-readable element label (polynomial form for the local algebra).
    pub fn display_element(&self, index: usize) -> String {
        match &self.structure {
            Structure::Cyclic(_) => index.to_string(),
            Structure::LocalAlgebra(p) => {
                let p = *p as usize;
                let (a, b, c) = (index % p, (index / p) % p, index / (p * p));
                let mut terms = Vec::new();
                if a != 0 {
                    terms.push(a.to_string());
                }
                for (coef, var) in [(b, "x"), (c, "y")] {
                    match coef {
                        0 => {}
                        1 => terms.push(var.to_string()),
                        k => terms.push(format!("{k}{var}")),
                    }
                }
                if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms.join("+")
                }
            }
            Structure::Product { left, right } => {
                let r = right.size();
                format!(
                    "({},{})",
                    left.display_element(index / r),
                    right.display_element(index % r)
                )
            }
            Structure::Quotient { parent, reps, .. } => parent.display_element(reps[index] as usize),
            Structure::Localization {
                parent, preimage, ..
            } => parent.display_element(preimage[index] as usize),
            Structure::Idealization { base, module, .. } => {
                let m = module.size();
                format!(
                    "({},{})",
                    base.display_element(index / m),
                    module.display_element(index % m)
                )
            }
        }
    }

    /// Raw tables, row-major.
    pub fn add_table(&self) -> &[u32] {
        &self.add
    }

    pub fn mul_table(&self) -> &[u32] {
        &self.mul
    }
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("expr", &self.expr.to_string())
            .field("size", &self.size)
            .field("units", &self.units.len())
            .finish()
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expr)
    }
}

/// An element paired with the ring it lives in.
#[derive(Clone, Copy)]
pub struct RingElement<'r> {
    ring: &'r FiniteRing,
    index: usize,
}

impl<'r> RingElement<'r> {
    pub fn index(self) -> usize {
        self.index
    }

    pub fn ring(self) -> &'r FiniteRing {
        self.ring
    }

    pub fn is_unit(self) -> bool {
        self.ring.is_unit(self.index)
    }

    fn same_ring(self, other: RingElement<'_>) {
        assert!(
            std::ptr::eq(self.ring, other.ring),
            "elements belong to different rings"
        );
    }
}

impl PartialEq for RingElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.ring, other.ring) && self.index == other.index
    }
}

impl Eq for RingElement<'_> {}

impl<'r> Add for RingElement<'r> {
    type Output = RingElement<'r>;

    fn add(self, rhs: Self) -> Self::Output {
        self.same_ring(rhs);
        self.ring.element(self.ring.add(self.index, rhs.index))
    }
}

impl<'r> Mul for RingElement<'r> {
    type Output = RingElement<'r>;

    fn mul(self, rhs: Self) -> Self::Output {
        self.same_ring(rhs);
        self.ring.element(self.ring.mul(self.index, rhs.index))
    }
}

impl<'r> Neg for RingElement<'r> {
    type Output = RingElement<'r>;

    fn neg(self) -> Self::Output {
        self.ring.element(self.ring.neg(self.index))
    }
}

impl fmt::Debug for RingElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring.display_element(self.index))
    }
}

impl fmt::Display for RingElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring.display_element(self.index))
    }
}
