//! Exact engine for finite commutative rings with identity.
//!
//! Rings are immutable operation tables ([`FiniteRing`]); ideals are sorted
//! element sets ([`Ideal`]) enumerated into a full [`IdealLattice`]. The
//! [`classify`] module decides six absorbing/prime ideal classes by
//! exhaustive scans, and [`harness`] replays structural theorems about those
//! classes over corpora of concrete rings.

pub mod caps;
pub mod classify;
pub mod dsl;
pub mod error;
pub mod harness;
pub mod ideal;
pub mod ring;

pub use caps::Caps;
pub use classify::{classify, Property, PropertyReport, TripleZeroWitness, Verdict, Witness};
pub use dsl::{parse_ideal, parse_ring, ElemLit, RingExpr};
pub use error::{Error, Result, SyntaxError};
pub use ideal::{Ideal, IdealLattice};
pub use ring::{FiniteRing, Homomorphism, RingElement};
