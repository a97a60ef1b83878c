//! The six ideal classes, decided by exhaustive scans over the ring tables.
//!
//! Every negative verdict carries the lexicographically least violating
//! tuple. Scans over nonunits include zero.

mod scan;
mod tmm;

use std::fmt;

pub use tmm::{tmm_characterize, tmm_characterize_with, TmmConditions, TmmContext};

use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Prime,
    WeaklyPrime,
    OneAbsorbingPrime,
    WeaklyOneAbsorbingPrime,
    TwoAbsorbing,
    WeaklyTwoAbsorbing,
}

impl Property {
    /// Report order: P, wP, 1A, w1A, 2A, w2A.
    pub const ALL: [Property; 6] = [
        Property::Prime,
        Property::WeaklyPrime,
        Property::OneAbsorbingPrime,
        Property::WeaklyOneAbsorbingPrime,
        Property::TwoAbsorbing,
        Property::WeaklyTwoAbsorbing,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Property::Prime => "prime",
            Property::WeaklyPrime => "weaklyPrime",
            Property::OneAbsorbingPrime => "1absPrime",
            Property::WeaklyOneAbsorbingPrime => "w1ap",
            Property::TwoAbsorbing => "2absorbing",
            Property::WeaklyTwoAbsorbing => "weakly2Absorbing",
        }
    }

    pub fn code(self) -> &'static str {
        match self {
            Property::Prime => "P",
            Property::WeaklyPrime => "wP",
            Property::OneAbsorbingPrime => "1A",
            Property::WeaklyOneAbsorbingPrime => "w1A",
            Property::TwoAbsorbing => "2A",
            Property::WeaklyTwoAbsorbing => "w2A",
        }
    }

    /// Accepts the key, the code, and a few common spellings.
    pub fn from_name(name: &str) -> Option<Property> {
        let p = match name {
            "prime" | "P" => Property::Prime,
            "weaklyPrime" | "wP" => Property::WeaklyPrime,
            "oneAbsorbingPrime" | "1A" | "1absPrime" | "1abs" => Property::OneAbsorbingPrime,
            "weaklyOneAbsorbingPrime" | "w1A" | "w1ap" => Property::WeaklyOneAbsorbingPrime,
            "twoAbsorbing" | "2A" | "2absorbing" => Property::TwoAbsorbing,
            "weaklyTwoAbsorbing" | "w2A" | "weakly2Absorbing" => Property::WeaklyTwoAbsorbing,
            _ => return None,
        };
        Some(p)
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// The `0 ≠` guarded variant.
    pub fn is_weak(self) -> bool {
        matches!(
            self,
            Property::WeaklyPrime | Property::WeaklyOneAbsorbingPrime | Property::WeaklyTwoAbsorbing
        )
    }

    pub fn evaluate(self, p: &Ideal) -> Result<Verdict> {
        if !p.is_proper() {
            return Err(Error::ImproperIdeal);
        }
        let s = scan::Scan::new(p);
        let weak = self.is_weak();
        Ok(match self {
            Property::Prime | Property::WeaklyPrime => s.prime(weak),
            Property::OneAbsorbingPrime | Property::WeaklyOneAbsorbingPrime => s.one_absorbing(weak),
            Property::TwoAbsorbing | Property::WeaklyTwoAbsorbing => s.two_absorbing(weak),
        })
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// The seven arrows of the implication diagram, as `(from, to)`.
pub const IMPLICATIONS: [(Property, Property); 7] = [
    (Property::Prime, Property::WeaklyPrime),
    (Property::Prime, Property::OneAbsorbingPrime),
    (Property::WeaklyPrime, Property::WeaklyOneAbsorbingPrime),
    (Property::OneAbsorbingPrime, Property::WeaklyOneAbsorbingPrime),
    (Property::OneAbsorbingPrime, Property::TwoAbsorbing),
    (Property::TwoAbsorbing, Property::WeaklyTwoAbsorbing),
    (Property::WeaklyOneAbsorbingPrime, Property::WeaklyTwoAbsorbing),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Witness {
    Pair(usize, usize),
    Triple(usize, usize, usize),
}

impl Witness {
    pub fn elements(&self) -> Vec<usize> {
        match *self {
            Witness::Pair(x, y) => vec![x, y],
            Witness::Triple(x, y, z) => vec![x, y, z],
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Pair(x, y) => write!(f, "({x},{y})"),
            Witness::Triple(x, y, z) => write!(f, "({x},{y},{z})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Fails(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(*w),
        }
    }
}

pub fn is_prime(p: &Ideal) -> Result<Verdict> {
    Property::Prime.evaluate(p)
}

pub fn is_weakly_prime(p: &Ideal) -> Result<Verdict> {
    Property::WeaklyPrime.evaluate(p)
}

pub fn is_two_absorbing(p: &Ideal) -> Result<Verdict> {
    Property::TwoAbsorbing.evaluate(p)
}

pub fn is_weakly_two_absorbing(p: &Ideal) -> Result<Verdict> {
    Property::WeaklyTwoAbsorbing.evaluate(p)
}

pub fn is_one_absorbing_prime(p: &Ideal) -> Result<Verdict> {
    Property::OneAbsorbingPrime.evaluate(p)
}

pub fn is_weakly_one_absorbing_prime(p: &Ideal) -> Result<Verdict> {
    Property::WeaklyOneAbsorbingPrime.evaluate(p)
}

/// Re-evaluates a witness against the raw tables: true iff it violates
/// `property` for `p`.
pub fn witness_violates(property: Property, p: &Ideal, witness: Witness) -> bool {
    let r = p.ring();
    let n = r.size();
    let mul = r.mul_table();
    let m = |a: usize, b: usize| mul[a * n + b] as usize;
    let inp = |a: usize| p.contains(a);
    let zero = r.zero();
    if witness.elements().iter().any(|&e| e >= n) {
        return false;
    }
    match (property, witness) {
        (Property::Prime | Property::WeaklyPrime, Witness::Pair(x, y)) => {
            let xy = m(x, y);
            inp(xy) && !inp(x) && !inp(y) && (!property.is_weak() || xy != zero)
        }
        (Property::TwoAbsorbing | Property::WeaklyTwoAbsorbing, Witness::Triple(x, y, z)) => {
            let xyz = m(m(x, y), z);
            inp(xyz)
                && !inp(m(x, y))
                && !inp(m(x, z))
                && !inp(m(y, z))
                && (!property.is_weak() || xyz != zero)
        }
        (Property::OneAbsorbingPrime | Property::WeaklyOneAbsorbingPrime, Witness::Triple(x, y, z)) => {
            let xyz = m(m(x, y), z);
            [x, y, z].iter().all(|&e| !r.is_unit(e))
                && inp(xyz)
                && !inp(m(x, y))
                && !inp(z)
                && (!property.is_weak() || xyz != zero)
        }
        _ => false,
    }
}

/// A nonunit triple `(x, y, z)` with `xyz = 0`, `xy ∉ P`, `z ∉ P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleZeroWitness {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl TripleZeroWitness {
    pub fn is_triple_zero_of(&self, p: &Ideal) -> bool {
        let r = p.ring();
        let (x, y, z) = (self.x, self.y, self.z);
        [x, y, z].iter().all(|&e| e < r.size() && !r.is_unit(e))
            && r.mul3(x, y, z) == r.zero()
            && !p.contains(r.mul(x, y))
            && !p.contains(z)
    }
}

impl fmt::Display for TripleZeroWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// All 1-triple zeros of a weakly 1-absorbing prime ideal, in lexicographic
/// order.
pub fn find_one_triple_zeros(p: &Ideal) -> Result<Vec<TripleZeroWitness>> {
    if !is_weakly_one_absorbing_prime(p)?.holds() {
        return Err(Error::NotW1AP);
    }
    Ok(scan::Scan::new(p).triple_zeros())
}

/// The six verdicts for one proper ideal.
#[derive(Clone, Debug)]
pub struct PropertyReport {
    ideal: Ideal,
    verdicts: [Verdict; 6],
}

impl PropertyReport {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn verdict(&self, p: Property) -> Verdict {
        self.verdicts[p.index()]
    }

    pub fn holds(&self, p: Property) -> bool {
        self.verdicts[p.index()].holds()
    }

    pub fn witness(&self, p: Property) -> Option<Witness> {
        self.verdicts[p.index()].witness()
    }

    pub fn verdicts(&self) -> impl Iterator<Item = (Property, Verdict)> + '_ {
        Property::ALL.iter().map(move |&p| (p, self.verdicts[p.index()]))
    }

    /// Six characters, `T` or `F`, in [`Property::ALL`] order.
    pub fn code(&self) -> String {
        self.verdicts
            .iter()
            .map(|v| if v.holds() { 'T' } else { 'F' })
            .collect()
    }

    /// Set when the ideal is `(0)`: the 2-absorbing verdict is then reported
    /// even though the classical definition asks for a nonzero ideal.
    pub fn zero_ideal_two_absorbing_flag(&self) -> bool {
        self.ideal.is_zero()
    }

    /// Diagram arrows whose source holds and target fails.
    pub fn broken_implications(&self) -> Vec<(Property, Property)> {
        IMPLICATIONS
            .iter()
            .copied()
            .filter(|&(a, b)| self.holds(a) && !self.holds(b))
            .collect()
    }

    /// Properties whose stored witness does not re-check as a violation.
    pub fn recheck(&self) -> Vec<Property> {
        self.verdicts()
            .filter_map(|(p, v)| match v {
                Verdict::Holds => None,
                Verdict::Fails(w) => (!witness_violates(p, &self.ideal, w)).then_some(p),
            })
            .collect()
    }
}

pub fn classify(p: &Ideal) -> Result<PropertyReport> {
    if !p.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let s = scan::Scan::new(p);
    let verdicts = [
        s.prime(false),
        s.prime(true),
        s.one_absorbing(false),
        s.one_absorbing(true),
        s.two_absorbing(false),
        s.two_absorbing(true),
    ];
    Ok(PropertyReport {
        ideal: p.clone(),
        verdicts,
    })
}

/// First proper ideal (in lattice order) that is not weakly 1-absorbing
/// prime, with its witness; `None` when every proper ideal is.
pub fn first_non_w1ap(lattice: &IdealLattice) -> Option<(usize, Witness)> {
    lattice.proper().find_map(|(i, p)| {
        is_weakly_one_absorbing_prime(p)
            .expect("proper")
            .witness()
            .map(|w| (i, w))
    })
}
