//! Theorem checks over ring corpora.
//!
//! Every check walks the corpus ring by ring, counts the instances whose
//! hypotheses hold (tested) and those where they do not (vacuous), and keeps
//! the first violation as a re-runnable [`Counterexample`].

mod checks;
pub mod corpus;
mod ctx;
mod zn;

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

pub use corpus::{default_corpus, default_corpus_text, parse_corpus, CorpusError};
pub use zn::{arithmetic_predicate, zn_classification, Boundary, ZnRow};

use crate::caps::Caps;
use crate::dsl::{self, RingExpr};
use crate::error::Result;
use crate::ring::FiniteRing;
use ctx::RingCtx;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Tred,
    Thom,
    Tfac,
    Tloc,
    Nql,
    Tmm,
    Ttriple,
    ReducedTriple,
    Ttri,
    Tcar,
    Tcarr,
    Pc1,
    Tql,
    CorM2,
    Tmax,
    Tring,
    ZnExample,
}

impl TheoremId {
    pub const ALL: [TheoremId; 17] = [
        TheoremId::Tred,
        TheoremId::Thom,
        TheoremId::Tfac,
        TheoremId::Tloc,
        TheoremId::Nql,
        TheoremId::Tmm,
        TheoremId::Ttriple,
        TheoremId::ReducedTriple,
        TheoremId::Ttri,
        TheoremId::Tcar,
        TheoremId::Tcarr,
        TheoremId::Pc1,
        TheoremId::Tql,
        TheoremId::CorM2,
        TheoremId::Tmax,
        TheoremId::Tring,
        TheoremId::ZnExample,
    ];

    pub fn label(self) -> &'static str {
        match self {
            TheoremId::Tred => "tred",
            TheoremId::Thom => "thom",
            TheoremId::Tfac => "tfac",
            TheoremId::Tloc => "tloc",
            TheoremId::Nql => "nql",
            TheoremId::Tmm => "tmm",
            TheoremId::Ttriple => "ttriple",
            TheoremId::ReducedTriple => "reducedTriple",
            TheoremId::Ttri => "ttri",
            TheoremId::Tcar => "tcar",
            TheoremId::Tcarr => "tcarr",
            TheoremId::Pc1 => "pc1",
            TheoremId::Tql => "tql",
            TheoremId::CorM2 => "cor-m2",
            TheoremId::Tmax => "tmax",
            TheoremId::Tring => "tring",
            TheoremId::ZnExample => "zn-example",
        }
    }

    pub fn from_label(label: &str) -> Option<TheoremId> {
        TheoremId::ALL.iter().copied().find(|t| t.label() == label)
    }

    /// Names of the parts tallied separately.
    pub fn parts(self) -> &'static [&'static str] {
        checks::parts(self)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartSummary {
    pub name: &'static str,
    pub tested: usize,
    pub vacuous: usize,
    pub failures: usize,
    /// Set for parts whose hypothesis cannot hold in a finite ring.
    pub provably_vacuous: bool,
}

impl PartSummary {
    pub fn status(&self) -> Status {
        if self.failures > 0 {
            Status::Fail
        } else if self.tested == 0 {
            Status::Vacuous
        } else {
            Status::Pass
        }
    }
}

/// A concrete violating instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub theorem: TheoremId,
    pub part: &'static str,
    pub ring: RingExpr,
    /// Ideal literals in `ring`.
    pub ideals: Vec<String>,
    pub elements: Vec<usize>,
    pub detail: String,
}

impl Counterexample {
    /// Rebuilds the ring, reruns the theorem on it alone, and reports whether
    /// the same violation comes back.
    pub fn reverify(&self, opts: &HarnessOptions) -> Result<bool> {
        let ctx = RingCtx::build(&self.ring, opts)?;
        let tally = checks::run(self.theorem, &ctx, opts)?;
        Ok(tally.violations.contains(self))
    }

    /// A `classify` command line for the ring and first ideal.
    pub fn classify_command(&self) -> String {
        match self.ideals.first() {
            Some(i) => format!("idealis classify \"{}\" \"{}\"", self.ring, i),
            None => format!("idealis classify \"{}\"", self.ring),
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}) in {}", self.theorem, self.part, self.ring)?;
        if !self.ideals.is_empty() {
            write!(f, ", ideals {}", self.ideals.join(" "))?;
        }
        if !self.elements.is_empty() {
            let e: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
            write!(f, ", elements ({})", e.join(","))?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Box<Counterexample>),
    Vacuous,
}

#[derive(Clone, Debug)]
pub struct TheoremCheck {
    pub id: TheoremId,
    pub corpus: Vec<RingExpr>,
    /// Instances with every hypothesis satisfied, over all parts.
    pub tested: usize,
    pub vacuous: usize,
    pub failures: usize,
    pub parts: Vec<PartSummary>,
    pub outcome: Outcome,
    pub notes: Vec<String>,
}

impl TheoremCheck {
    pub fn status(&self) -> Status {
        match self.outcome {
            Outcome::Pass => Status::Pass,
            Outcome::Fail(_) => Status::Fail,
            Outcome::Vacuous => Status::Vacuous,
        }
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match &self.outcome {
            Outcome::Fail(c) => Some(c),
            _ => None,
        }
    }
}

/// Test hook: overwrite the unit status of one element of one corpus ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitFault {
    pub ring: RingExpr,
    pub element: usize,
    pub is_unit: bool,
}

#[derive(Clone, Debug, Default)]
pub struct HarnessOptions {
    pub caps: Caps,
    pub unit_fault: Option<UnitFault>,
}

impl HarnessOptions {
    pub fn new(caps: Caps) -> Self {
        HarnessOptions { caps, unit_fault: None }
    }

    /// Builds a corpus ring, applying the unit fault when it targets `expr`.
    pub fn build_ring(&self, expr: &RingExpr) -> Result<Arc<FiniteRing>> {
        let ring = dsl::elaborate(expr, &self.caps)?;
        match &self.unit_fault {
            Some(f) if &f.ring == expr => {
                ring.check_element(f.element)?;
                let mut faulty = (*ring).clone();
                faulty.inject_unit_fault(f.element, f.is_unit);
                Ok(Arc::new(faulty))
            }
            _ => Ok(ring),
        }
    }
}

/// Runs every theorem over `corpus`.
pub fn run_all(corpus: &[RingExpr], opts: &HarnessOptions) -> Result<Vec<TheoremCheck>> {
    run(&TheoremId::ALL, corpus, opts)
}

pub fn run(ids: &[TheoremId], corpus: &[RingExpr], opts: &HarnessOptions) -> Result<Vec<TheoremCheck>> {
    let ctxs: Vec<RingCtx> = corpus
        .par_iter()
        .map(|e| RingCtx::build(e, opts))
        .collect::<Result<_>>()?;
    ids.iter().map(|&id| check(id, corpus, &ctxs, opts)).collect()
}

/// Runs one theorem over `corpus`.
pub fn run_one(id: TheoremId, corpus: &[RingExpr], opts: &HarnessOptions) -> Result<TheoremCheck> {
    Ok(run(&[id], corpus, opts)?.remove(0))
}

fn check(id: TheoremId, corpus: &[RingExpr], ctxs: &[RingCtx], opts: &HarnessOptions) -> Result<TheoremCheck> {
    let tallies: Vec<checks::Tally> = ctxs
        .par_iter()
        .map(|c| checks::run(id, c, opts))
        .collect::<Result<_>>()?;
    let names = id.parts();
    let mut parts: Vec<PartSummary> = names
        .iter()
        .map(|&name| PartSummary {
            name,
            tested: 0,
            vacuous: 0,
            failures: 0,
            provably_vacuous: checks::provably_vacuous(id, name),
        })
        .collect();
    let mut first: Option<Counterexample> = None;
    let mut notes = Vec::new();
    for t in tallies {
        for (i, p) in parts.iter_mut().enumerate() {
            p.tested += t.tested[i];
            p.vacuous += t.vacuous[i];
        }
        for v in t.violations {
            let i = names.iter().position(|&n| n == v.part).expect("known part");
            parts[i].failures += 1;
            first.get_or_insert(v);
        }
        notes.extend(t.notes);
    }
    notes.extend(checks::static_notes(id).iter().map(|s| s.to_string()));
    let tested = parts.iter().map(|p| p.tested).sum();
    let vacuous = parts.iter().map(|p| p.vacuous).sum();
    let failures = parts.iter().map(|p| p.failures).sum();
    let outcome = match first {
        Some(c) => Outcome::Fail(Box::new(c)),
        None if tested == 0 => Outcome::Vacuous,
        None => Outcome::Pass,
    };
    Ok(TheoremCheck {
        id,
        corpus: corpus.to_vec(),
        tested,
        vacuous,
        failures,
        parts,
        outcome,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_corpus() -> Vec<RingExpr> {
        parse_corpus("Z8\nZ12\nZ6\nZ2 x Z4\nZ4 x Z4\nLocalAlg(2)\nIdealize(Z4, (2))\nZ30\nZ2 x Z2 x Z2\n").unwrap()
    }

    #[test]
    fn small_corpus_passes() {
        let opts = HarnessOptions::default();
        for c in run_all(&small_corpus(), &opts).unwrap() {
            assert_ne!(c.status(), Status::Fail, "{}: {:?}", c.id, c.counterexample());
        }
    }

    #[test]
    fn unit_fault_breaks_tql() {
        let corpus = parse_corpus("Z8\n").unwrap();
        let mut opts = HarnessOptions::default();
        opts.unit_fault = Some(UnitFault { ring: corpus[0].clone(), element: 3, is_unit: false });
        let c = run_one(TheoremId::Tql, &corpus, &opts).unwrap();
        let ce = c.counterexample().expect("fault detected");
        assert!(ce.reverify(&opts).unwrap());
        assert!(!ce.reverify(&HarnessOptions::default()).unwrap());
    }

    #[test]
    fn labels_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(TheoremId::from_label(id.label()), Some(id));
        }
    }
}
