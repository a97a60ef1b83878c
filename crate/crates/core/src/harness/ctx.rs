//! Per-ring data shared by all checks: lattice and the six verdicts of every
//! proper ideal.

use std::sync::Arc;

use super::HarnessOptions;
use crate::classify::{classify, Property, PropertyReport, Witness};
use crate::dsl::RingExpr;
use crate::error::Result;
use crate::ideal::{is_reduced, Ideal, IdealLattice};
use crate::ring::FiniteRing;

pub(crate) struct RingCtx {
    pub expr: RingExpr,
    pub ring: Arc<FiniteRing>,
    pub lattice: IdealLattice,
    /// Indexed like the lattice; `None` for the whole ring.
    pub reports: Vec<Option<PropertyReport>>,
    pub reduced: bool,
    pub jacobson: Ideal,
    /// First proper ideal that is not weakly 1-absorbing prime.
    pub first_non_w1ap: Option<(usize, Witness)>,
}

impl RingCtx {
    pub fn build(expr: &RingExpr, opts: &HarnessOptions) -> Result<RingCtx> {
        let ring = opts.build_ring(expr)?;
        let lattice = IdealLattice::enumerate(&ring, &opts.caps)?;
        let reports = lattice
            .ideals()
            .iter()
            .map(|p| p.is_proper().then(|| classify(p)).transpose())
            .collect::<Result<Vec<_>>>()?;
        let first_non_w1ap = reports.iter().enumerate().find_map(|(i, r)| {
            r.as_ref()
                .and_then(|r| r.witness(Property::WeaklyOneAbsorbingPrime))
                .map(|w| (i, w))
        });
        Ok(RingCtx {
            expr: expr.clone(),
            reduced: is_reduced(&ring),
            jacobson: lattice.jacobson(),
            ring,
            lattice,
            reports,
            first_non_w1ap,
        })
    }

    pub fn all_w1ap(&self) -> bool {
        self.first_non_w1ap.is_none()
    }

    pub fn quasi_local(&self) -> bool {
        self.lattice.is_quasi_local()
    }

    /// Proper ideals with their reports.
    pub fn proper(&self) -> impl Iterator<Item = (&Ideal, &PropertyReport)> {
        self.lattice
            .ideals()
            .iter()
            .zip(&self.reports)
            .filter_map(|(i, r)| r.as_ref().map(|r| (i, r)))
    }
}
