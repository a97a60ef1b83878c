use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use idealis_cli::dot::{lattice_dot, lattice_text};
use idealis_cli::property_expr::parse_property_expr;
use idealis_cli::report::{render, Classification};
use idealis_cli::search::{search, DEFAULT_MAX_SIZE};
use idealis_cli::verify::{parse_unit_fault, render_table, run_verify};
use idealis_cli::{resolve_caps, CliError, CAP_ENV};
use idealis_core::harness::{default_corpus, parse_corpus, HarnessOptions};
use idealis_core::{dsl, Caps, IdealLattice, Property};

/// Ideal-theoretic properties of small finite commutative rings.
#[derive(Parser)]
#[command(name = "idealis", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Maximum number of ring elements (overrides IDEALIS_CAP).
    #[arg(long, global = true)]
    cap: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one ideal, or every proper ideal, of a ring.
    Classify {
        ring: String,
        ideal: Option<String>,
        /// JSON report (the default).
        #[arg(long)]
        json: bool,
        /// Recompute every verdict and re-validate every witness.
        #[arg(long)]
        recheck: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Print the ideal lattice.
    Lattice {
        ring: String,
        /// Graphviz output.
        #[arg(long)]
        dot: bool,
        /// JSON report of the whole lattice.
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        #[arg(long)]
        recheck: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Check every theorem over a corpus of rings.
    Verify {
        /// Corpus file, one ring expression per line.
        #[arg(long, conflicts_with = "default")]
        corpus: Option<PathBuf>,
        /// Use the built-in corpus.
        #[arg(long)]
        default: bool,
        #[arg(long, hide = true, value_name = "RING:ELEM")]
        inject_unit_fault: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// List (ring, ideal) pairs matching a property expression.
    Search {
        #[arg(long)]
        property: String,
        #[arg(long, default_value_t = DEFAULT_MAX_SIZE)]
        max_size: usize,
        /// One JSON object per line.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        common: Common,
    },
}

fn caps(common: &Common) -> Result<Caps, CliError> {
    resolve_caps(common.cap, std::env::var(CAP_ENV).ok().as_deref())
}

fn emit(text: &str) {
    let mut out = io::stdout().lock();
    // A closed pipe is not an error worth reporting.
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
}

fn recheck_result(c: &Classification, caps: &Caps) -> Result<(), CliError> {
    let mismatches = c.recheck(caps)?;
    if mismatches.is_empty() {
        eprintln!("recheck: {} ideals, no mismatches", c.reports.len());
        Ok(())
    } else {
        Err(CliError::failure(format!("recheck failed:\n{}", mismatches.join("\n"))))
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Classify { ring, ideal, json: _, recheck, common } => {
            let caps = caps(&common)?;
            let r = dsl::build_ring(&ring, &caps)?;
            let c = Classification::build(r, ideal.as_deref(), &caps)?;
            emit(&(render(&c.to_json()) + "\n"));
            if recheck {
                recheck_result(&c, &caps)?;
            }
            Ok(0)
        }
        Command::Lattice { ring, dot, json, recheck, common } => {
            let caps = caps(&common)?;
            let r = dsl::build_ring(&ring, &caps)?;
            if json || recheck {
                let c = Classification::build(r.clone(), None, &caps)?;
                if json {
                    emit(&(render(&c.to_json()) + "\n"));
                }
                if recheck {
                    recheck_result(&c, &caps)?;
                }
                if json {
                    return Ok(0);
                }
            }
            let lattice = IdealLattice::enumerate(&r, &caps)?;
            emit(&if dot { lattice_dot(&lattice)? } else { lattice_text(&lattice)? });
            Ok(0)
        }
        Command::Verify { corpus, default, inject_unit_fault, common } => {
            let mut opts = HarnessOptions::new(caps(&common)?);
            let corpus = match (corpus, default) {
                (Some(path), _) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
                    parse_corpus(&text).map_err(|e| CliError::usage(e.to_string()))?
                }
                (None, true) => default_corpus(),
                (None, false) => return Err(CliError::usage("verify needs --corpus <path> or --default")),
            };
            if let Some(spec) = inject_unit_fault {
                opts.unit_fault = Some(parse_unit_fault(&spec, &opts)?);
            }
            let run = run_verify(&corpus, &opts)?;
            for w in &run.warnings {
                eprintln!("warning: {w}");
            }
            emit(&render_table(&run));
            Ok(run.exit_code())
        }
        Command::Search { property, max_size, json, common } => {
            let caps = caps(&common)?;
            let expr = parse_property_expr(&property).map_err(|e| CliError::usage(e.to_string()))?;
            search(&expr, max_size, &caps, |hit| {
                let line = if json {
                    let w1ap = hit.report.holds(Property::WeaklyOneAbsorbingPrime);
                    let v = serde_json::json!({
                        "ring": hit.ring_text(),
                        "ideal": hit.ideal_text(),
                        "code": hit.report.code(),
                        "w1ap": w1ap,
                    });
                    serde_json::to_string(&v).expect("values serialize")
                } else {
                    format!("{}\t{}\t{}", hit.ring_text(), hit.ideal_text(), hit.report.code())
                };
                emit(&(line + "\n"));
                true
            })?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
