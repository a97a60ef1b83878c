//! Which `Zn` have every proper ideal weakly 1-absorbing prime.

use std::fmt;

use rayon::prelude::*;

use crate::caps::Caps;
use crate::classify::{first_non_w1ap, Witness};
use crate::error::Result;
use crate::ideal::IdealLattice;
use crate::ring::zn;

/// `n` values the arithmetic characterization does not speak to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    Prime,
    PrimeSquare,
}

impl Boundary {
    pub fn of(n: u64) -> Option<Boundary> {
        match factor(n).as_slice() {
            [(_, 1)] => Some(Boundary::Prime),
            [(_, 2)] => Some(Boundary::PrimeSquare),
            _ => None,
        }
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Boundary::Prime => "prime",
            Boundary::PrimeSquare => "prime square",
        })
    }
}

/// Prime factorization as `(p, exponent)` pairs in ascending `p`.
pub(crate) fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `n = p³` or `n = p₁p₂` with `p₁ ≠ p₂`.
pub fn arithmetic_predicate(n: u64) -> bool {
    matches!(factor(n).as_slice(), [(_, 3)] | [(_, 1), (_, 1)])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZnRow {
    pub n: u64,
    /// Every proper ideal of `Zn` is weakly 1-absorbing prime.
    pub engine: bool,
    pub predicate: bool,
    pub boundary: Option<Boundary>,
    /// First failing ideal and its witness when `engine` is false.
    pub failing: Option<(String, Witness)>,
}

impl ZnRow {
    pub fn agrees(&self) -> bool {
        self.engine == self.predicate
    }
}

pub fn zn_row(n: u64, caps: &Caps) -> Result<ZnRow> {
    let r = zn(n, caps)?;
    let lattice = IdealLattice::enumerate(&r, caps)?;
    let failing = first_non_w1ap(&lattice).map(|(i, w)| (lattice.get(i).to_literal_text(), w));
    Ok(ZnRow {
        n,
        engine: failing.is_none(),
        predicate: arithmetic_predicate(n),
        boundary: Boundary::of(n),
        failing,
    })
}

/// One row per `2 ≤ n ≤ max_n`.
pub fn zn_classification(max_n: u64, caps: &Caps) -> Result<Vec<ZnRow>> {
    (2..=max_n).into_par_iter().map(|n| zn_row(n, caps)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicate() {
        assert!(arithmetic_predicate(27));
        assert!(arithmetic_predicate(6));
        assert!(arithmetic_predicate(8));
        assert!(!arithmetic_predicate(4));
        assert!(!arithmetic_predicate(2));
        assert!(!arithmetic_predicate(12));
        assert!(!arithmetic_predicate(30));
        assert!(!arithmetic_predicate(16));
    }

    #[test]
    fn boundaries() {
        assert_eq!(Boundary::of(7), Some(Boundary::Prime));
        assert_eq!(Boundary::of(49), Some(Boundary::PrimeSquare));
        assert_eq!(Boundary::of(12), None);
        assert_eq!(Boundary::of(8), None);
    }

    #[test]
    fn small_rows() {
        let z12 = zn_row(12, &Caps::default()).unwrap();
        assert!(!z12.engine);
        assert_eq!(z12.failing.as_ref().unwrap().0, "(6)");
        assert!(zn_row(27, &Caps::default()).unwrap().engine);
        let z2 = zn_row(2, &Caps::default()).unwrap();
        assert!(z2.engine && !z2.predicate && z2.boundary == Some(Boundary::Prime));
    }
}
