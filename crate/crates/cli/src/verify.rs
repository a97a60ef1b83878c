//! The `verify` summary table.

use std::fmt::Write;

use idealis_core::dsl::RingExpr;
use idealis_core::harness::{self, HarnessOptions, Status, TheoremCheck, UnitFault};
use idealis_core::{dsl, Result};

use crate::CliError;

pub struct VerifyRun {
    pub checks: Vec<TheoremCheck>,
    pub warnings: Vec<String>,
}

impl VerifyRun {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status() != Status::Fail)
    }

    pub fn exit_code(&self) -> u8 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }
}

pub fn run_verify(corpus: &[RingExpr], opts: &HarnessOptions) -> Result<VerifyRun> {
    let mut warnings = Vec::new();
    if corpus.is_empty() {
        warnings.push("corpus is empty; every check is vacuous".to_string());
    }
    let checks = harness::run_all(corpus, opts)?;
    Ok(VerifyRun { checks, warnings })
}

/// Parses `RING:ELEM`, e.g. `Z8:3`, and flips that element's unit status.
pub fn parse_unit_fault(spec: &str, opts: &HarnessOptions) -> Result<UnitFault, CliError> {
    let (ring, elem) = spec
        .rsplit_once(':')
        .ok_or_else(|| CliError::usage(format!("expected RING:ELEM, got `{spec}`")))?;
    let expr = dsl::parse_ring(ring.trim()).map_err(idealis_core::Error::from)?;
    let r = dsl::elaborate(&expr, &opts.caps)?;
    let element: usize = elem
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("element index expected after `:`, got `{elem}`")))?;
    r.check_element(element)?;
    Ok(UnitFault { ring: expr, element, is_unit: !r.is_unit(element) })
}

pub fn render_table(run: &VerifyRun) -> String {
    let mut out = String::new();
    writeln!(out, "{:<16}{:<9}{:>10}{:>10}{:>10}", "check", "status", "tested", "vacuous", "failures").unwrap();
    for c in &run.checks {
        row(&mut out, c.id.label(), c.status(), c.tested, c.vacuous, c.failures, "");
        if c.parts.len() > 1 || c.parts.iter().any(|p| p.provably_vacuous) {
            for p in &c.parts {
                let note = if p.provably_vacuous { "  hypothesis unsatisfiable in finite rings" } else { "" };
                row(&mut out, &format!("  {}", p.name), p.status(), p.tested, p.vacuous, p.failures, note);
            }
        }
    }
    let count = |s| run.checks.iter().filter(|c| c.status() == s).count();
    writeln!(
        out,
        "\n{} checks: {} pass, {} fail, {} vacuous",
        run.checks.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Vacuous)
    )
    .unwrap();
    for c in &run.checks {
        for n in &c.notes {
            writeln!(out, "note [{}]: {n}", c.id).unwrap();
        }
    }
    for c in &run.checks {
        if let Some(ce) = c.counterexample() {
            writeln!(out, "\ncounterexample: {ce}").unwrap();
            writeln!(out, "  rerun: {}", ce.classify_command()).unwrap();
        }
    }
    out
}

fn row(out: &mut String, name: &str, s: Status, tested: usize, vacuous: usize, failures: usize, note: &str) {
    writeln!(out, "{name:<16}{:<9}{tested:>10}{vacuous:>10}{failures:>10}{note}", s.as_str()).unwrap();
}

#[cfg(test)]
mod tests {
    use super::*;
    use idealis_core::harness::parse_corpus;

    #[test]
    fn empty_corpus_is_all_vacuous() {
        let run = run_verify(&[], &HarnessOptions::default()).unwrap();
        assert_eq!(run.checks.len(), 17);
        assert!(run.checks.iter().all(|c| c.status() == Status::Vacuous));
        assert_eq!(run.exit_code(), 0);
        assert_eq!(run.warnings.len(), 1);
        assert!(render_table(&run).contains("17 checks: 0 pass, 0 fail, 17 vacuous"));
    }

    #[test]
    fn fault_spec() {
        let opts = HarnessOptions::default();
        let f = parse_unit_fault("Z8:3", &opts).unwrap();
        assert_eq!((f.element, f.is_unit), (3, false));
        assert_eq!(parse_unit_fault("Z8", &opts).unwrap_err().code, 2);
        assert_eq!(parse_unit_fault("Z8:9", &opts).unwrap_err().code, 2);
        assert_eq!(parse_unit_fault("Q8:1", &opts).unwrap_err().code, 2);
    }

    #[test]
    fn fault_produces_counterexample() {
        let mut opts = HarnessOptions::default();
        opts.unit_fault = Some(parse_unit_fault("Z8:3", &opts).unwrap());
        let run = run_verify(&parse_corpus("Z8\n").unwrap(), &opts).unwrap();
        assert_eq!(run.exit_code(), 1);
        let table = render_table(&run);
        assert!(table.contains("counterexample: tql"), "{table}");
        assert!(table.contains("rerun: idealis classify \"Z8\""));
    }
}
