//! Exhaustive search for ideals matching a property expression.

use std::sync::Arc;

use idealis_core::dsl::{self, RingExpr};
use idealis_core::{classify, Caps, FiniteRing, IdealLattice, PropertyReport, Result};

use crate::property_expr::PropExpr;

pub const DEFAULT_MAX_SIZE: usize = 16;

#[derive(Clone, Debug)]
pub struct Hit {
    pub ring: Arc<FiniteRing>,
    pub report: PropertyReport,
}

impl Hit {
    pub fn ring_text(&self) -> String {
        self.ring.expr().to_string()
    }

    pub fn ideal_text(&self) -> String {
        self.report.ideal().to_literal_text()
    }
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |d| n % d == 0)
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Search space in increasing size. Within one size: `Zn`, then two- and
/// three-factor products of cyclic rings, then `LocalAlg(p)`, then
/// `Idealize(Zn, (d))`, each in lexicographic order of parameters.
pub fn candidates(max_size: usize) -> Vec<RingExpr> {
    let mut out = Vec::new();
    for s in 2..=max_size {
        let mut texts = vec![format!("Z{s}")];
        for a in divisors(s).filter(|&a| a >= 2) {
            let b = s / a;
            if b >= a {
                texts.push(format!("Z{a} x Z{b}"));
            }
        }
        for a in divisors(s).filter(|&a| a >= 2) {
            for b in divisors(s / a).filter(|&b| b >= a) {
                let c = s / a / b;
                if c >= b {
                    texts.push(format!("Z{a} x Z{b} x Z{c}"));
                }
            }
        }
        if let Some(p) = (2..=s).find(|p| p * p * p == s) {
            if is_prime(p) {
                texts.push(format!("LocalAlg({p})"));
            }
        }
        // Idealize(Zn, (d)) has n * d elements.
        for n in 2..=s {
            if s % n == 0 {
                let d = s / n;
                if d >= 2 && n % d == 0 {
                    let gen = if d == n { 0 } else { d };
                    texts.push(format!("Idealize(Z{n}, ({gen}))"));
                }
            }
        }
        out.extend(texts.iter().map(|t| dsl::parse_ring(t).expect("generated text parses")));
    }
    out
}

/// Calls `sink` for each matching `(ring, ideal)` in search order; stops
/// early when `sink` returns `false`.
pub fn search(expr: &PropExpr, max_size: usize, caps: &Caps, mut sink: impl FnMut(Hit) -> bool) -> Result<()> {
    if expr.is_unsatisfiable() {
        return Ok(());
    }
    for e in candidates(max_size) {
        let ring = dsl::elaborate(&e, caps)?;
        let lattice = IdealLattice::enumerate(&ring, caps)?;
        for (_, p) in lattice.proper() {
            let report = classify(p)?;
            if expr.eval(&report) && !sink(Hit { ring: Arc::clone(&ring), report }) {
                return Ok(());
            }
        }
    }
    Ok(())
}

pub fn search_all(expr: &PropExpr, max_size: usize, caps: &Caps) -> Result<Vec<Hit>> {
    let mut hits = Vec::new();
    search(expr, max_size, caps, |h| {
        hits.push(h);
        true
    })?;
    Ok(hits)
}
