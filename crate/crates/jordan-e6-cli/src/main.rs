//! `jordan-e6`: verification runs, dimension counts and the constructive
//! algorithms from the command line. JSON goes to standard output.
//!
//! Exit codes: 0 success, 1 failing verification reports, 2 usage or input
//! errors, 3 numerical failures (no convergence, unstable rank).

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use jordan_e6::algebra::RingTag;
use jordan_e6::algorithms::{diagonalize, lie_dim, reduce_to_e, LieField};
use jordan_e6::error::{AlgorithmError, HarnessError};
use jordan_e6::field::Exact;
use jordan_e6::harness::{self, Backend, SuiteConfig};
use jordan_e6::jordan::JordanElement;
use jordan_e6::matgroups::GroupSpec;

#[derive(Parser)]
#[command(name = "jordan-e6", version, about = "Exceptional Jordan algebras: verification suites and algorithms")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the verification suites and print a JSON report.
    Verify(VerifyArgs),
    /// Dimension of the Lie algebra of the determinant-preserving group.
    Dim {
        #[arg(long)]
        ring: RingTag,
        #[arg(long, default_value = "complex")]
        field: LieField,
        #[arg(long, default_value = "exact")]
        backend: Backend,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Diagonalize an element of 𝔍(3, ℂ^C) read as JSON (file or stdin).
    Diagonalize {
        input: Option<PathBuf>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Operators taking a determinant-one element (JSON) to E.
    Reduce {
        input: Option<PathBuf>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Random element of a matrix group.
    Sample {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "exact")]
        backend: Backend,
        #[command(flatten)]
        out: OutArg,
    },
    /// Render a saved verify report as a markdown table.
    Report {
        input: Option<PathBuf>,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Trials per suite (overrides each suite's default).
    #[arg(long)]
    trials: Option<usize>,
    /// Float tolerance.
    #[arg(long, default_value_t = harness::DEFAULT_TOL)]
    tol: f64,
    #[arg(long)]
    ring: Option<RingTag>,
    /// Theorem id, or a prefix such as "Lemma 4.1.8".
    #[arg(long)]
    theorem: Option<String>,
    #[arg(long)]
    backend: Option<Backend>,
    /// Include per-suite wall time (output is then not reproducible).
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct OutArg {
    /// Also write the output to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Numerical(String),
    Reports,
}

impl From<AlgorithmError> for Failure {
    fn from(e: AlgorithmError) -> Self {
        match e {
            AlgorithmError::NoConvergence(..) | AlgorithmError::RankUnstable(..) => Failure::Numerical(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(usage)?;
            Ok(s)
        }
    }
}

fn read_json(path: &Option<PathBuf>) -> Result<Value, Failure> {
    serde_json::from_str(&read_input(path)?).map_err(|e| usage(format!("invalid JSON: {e}")))
}

fn emit(text: &str, out: &OutArg) -> Result<(), Failure> {
    // A closed pipe (`| head`) is not an error.
    match writeln!(io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => return Err(usage(e)),
        _ => {}
    }
    if let Some(p) = &out.out {
        fs::write(p, format!("{text}\n")).map_err(|e| usage(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn emit_json(v: &Value, out: &OutArg) -> Result<(), Failure> {
    emit(&serde_json::to_string_pretty(v).expect("JSON values serialize"), out)
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Verify(a) => {
            let cfg = SuiteConfig {
                seed: a.seed,
                trials: a.trials,
                tol: a.tol,
                ring: a.ring,
                theorem: a.theorem,
                backend: a.backend,
                timings: a.timings,
            };
            let reports = harness::verify(&cfg);
            if reports.is_empty() {
                return Err(usage("no suite matches the given filters"));
            }
            emit_json(&harness::report_json(&cfg, &reports), &a.out)?;
            if !harness::all_pass(&reports) {
                return Err(Failure::Reports);
            }
        }
        Cmd::Dim { ring, field, backend, seed, out } => {
            let r = match backend {
                Backend::Exact => lie_dim::<Exact>(ring, field, seed)?,
                Backend::Float => lie_dim::<f64>(ring, field, seed)?,
            };
            emit_json(&r.to_json(), &out)?;
        }
        Cmd::Diagonalize { input, out } => {
            let x = JordanElement::<f64>::from_json(&read_json(&input)?).map_err(usage)?;
            emit_json(&diagonalize(&x)?.to_json(), &out)?;
        }
        Cmd::Reduce { input, out } => {
            let x = JordanElement::<f64>::from_json(&read_json(&input)?).map_err(usage)?;
            emit_json(&reduce_to_e(&x)?.to_json(), &out)?;
        }
        Cmd::Sample { group, seed, backend, out } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = match backend {
                Backend::Exact => group.sample::<Exact, _>(&mut rng).to_json(),
                Backend::Float => group.sample::<f64, _>(&mut rng).to_json(),
            };
            emit_json(&m, &out)?;
        }
        Cmd::Report { input, out } => {
            let reports = harness::parse_report(&read_json(&input)?).map_err(|e: HarnessError| usage(e))?;
            emit(harness::render_markdown(&reports).trim_end(), &out)?;
            if !harness::all_pass(&reports) {
                return Err(Failure::Reports);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Reports) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Numerical(m)) => {
            eprintln!("numerical failure: {m}");
            ExitCode::from(3)
        }
    }
}
