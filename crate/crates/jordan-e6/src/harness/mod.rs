//! Seeded verification suites.
//!
//! A suite is a row of data: an id, the ring it runs over, and a per-trial
//! evaluator for each backend it supports. A trial draws its inputs from a
//! ChaCha8 stream and returns a residual; the report records the largest one.
//! On the exact backend a residual is either exactly zero or positive, so
//! the tolerance there is 0.
//!
//! Each (suite, backend) cell derives its seed from the configured seed and
//! its id, and trial `t` runs on stream `t` of that seed. Cells and trials
//! run in parallel; reports are merged sorted by id, so equal configurations
//! produce identical reports.

mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::RingTag;
use crate::error::HarnessError;

pub use suites::{planted_idempotent, registry, IdempotentKind};

/// Version tag written into every JSON report.
pub const SCHEMA: &str = "jordan-e6/report-v1";
/// Default float tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Default trials per polynomial identity.
pub const DEFAULT_EXACT_TRIALS: usize = 200;
pub const DEFAULT_FLOAT_TRIALS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl Backend {
    pub fn as_str(self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Backend {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "exact" => Ok(Backend::Exact),
            "float" | "f64" => Ok(Backend::Float),
            _ => Err(HarnessError::UnknownBackend(s.to_string())),
        }
    }
}

/// One trial: `(rng, trial index, tolerance) → residual`.
pub type TrialFn = fn(&mut ChaCha8Rng, usize, f64) -> Result<f64, HarnessError>;

/// A registry row.
#[derive(Clone, Debug)]
pub struct Suite {
    pub id: &'static str,
    pub ring: RingTag,
    pub exact: Option<TrialFn>,
    pub float: Option<TrialFn>,
    /// Trial count when the config does not set one (`None`: the defaults
    /// for polynomial identities).
    pub trials: Option<usize>,
    /// Float tolerance overriding the configured one.
    pub float_tol: Option<f64>,
}

impl Suite {
    pub fn backends(&self) -> Vec<Backend> {
        let mut out = Vec::new();
        if self.exact.is_some() {
            out.push(Backend::Exact);
        }
        if self.float.is_some() {
            out.push(Backend::Float);
        }
        out
    }

    fn trial_fn(&self, b: Backend) -> Option<TrialFn> {
        match b {
            Backend::Exact => self.exact,
            Backend::Float => self.float,
        }
    }

    fn default_trials(&self, b: Backend) -> usize {
        self.trials.unwrap_or(match b {
            Backend::Exact => DEFAULT_EXACT_TRIALS,
            Backend::Float => DEFAULT_FLOAT_TRIALS,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Overrides every suite's trial count.
    pub trials: Option<usize>,
    /// Float tolerance.
    pub tol: f64,
    pub ring: Option<RingTag>,
    /// Exact id, or a prefix followed by `(` or a space.
    pub theorem: Option<String>,
    /// `None` runs each suite on exact when it can, float otherwise.
    pub backend: Option<Backend>,
    /// Record wall time in reports (breaks byte-identical output).
    #[serde(skip)]
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 1, trials: None, tol: DEFAULT_TOL, ring: None, theorem: None, backend: None, timings: false }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub id: String,
    pub ring: RingTag,
    pub backend: Backend,
    pub trials: usize,
    /// `None` when no trial ran or a trial errored.
    pub max_residual: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
    /// No trials ran; counts as a failure.
    pub vacuous: bool,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

/// Whether `id` is selected by the theorem filter `f`.
pub fn theorem_matches(id: &str, f: &str) -> bool {
    let f = f.trim();
    id == f || (id.starts_with(f) && matches!(id[f.len()..].chars().next(), Some('(') | Some(' ')))
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Seed of a cell, from the configured seed and the cell's identity.
pub fn cell_seed(seed: u64, id: &str, ring: RingTag, backend: Backend) -> u64 {
    let mut z = seed ^ fnv1a(&format!("{id}|{ring}|{backend}"));
    // splitmix64 finalizer
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// The (suite, backend) cells selected by `cfg`.
pub fn select(cfg: &SuiteConfig) -> Vec<(Suite, Backend)> {
    registry()
        .into_iter()
        .filter(|s| cfg.ring.map_or(true, |r| r == s.ring))
        .filter(|s| cfg.theorem.as_deref().map_or(true, |f| theorem_matches(s.id, f)))
        .filter_map(|s| {
            let b = match cfg.backend {
                Some(b) => s.trial_fn(b).map(|_| b),
                None => s.backends().first().copied(),
            }?;
            Some((s, b))
        })
        .collect()
}

fn run_cell(s: &Suite, backend: Backend, cfg: &SuiteConfig) -> VerifyReport {
    let start = Instant::now();
    let f = s.trial_fn(backend).expect("selected backends have an evaluator");
    let trials = cfg.trials.unwrap_or_else(|| s.default_trials(backend));
    let tolerance = match backend {
        Backend::Exact => 0.0,
        Backend::Float => s.float_tol.unwrap_or(cfg.tol),
    };
    let seed = cell_seed(cfg.seed, s.id, s.ring, backend);
    let results: Vec<Result<f64, HarnessError>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t as u64);
            f(&mut rng, t, tolerance)
        })
        .collect();
    let error = results.iter().find_map(|r| r.as_ref().err()).map(|e| e.to_string());
    let max_residual = if trials == 0 || error.is_some() {
        None
    } else {
        Some(results.iter().map(|r| *r.as_ref().expect("no errors")).fold(0.0, f64::max))
    };
    let vacuous = trials == 0;
    let pass = max_residual.map_or(false, |m| m <= tolerance);
    VerifyReport {
        id: s.id.to_string(),
        ring: s.ring,
        backend,
        trials,
        max_residual,
        tolerance,
        pass,
        vacuous,
        seed,
        error,
        wall_ms: cfg.timings.then(|| start.elapsed().as_secs_f64() * 1e3),
    }
}

/// Runs every selected suite; one report per (theorem id, ring) cell.
pub fn verify(cfg: &SuiteConfig) -> Vec<VerifyReport> {
    let cells = select(cfg);
    let mut reports: Vec<VerifyReport> = cells.par_iter().map(|(s, b)| run_cell(s, *b, cfg)).collect();
    reports.sort_by(|a, b| (&a.id, a.ring, a.backend).cmp(&(&b.id, b.ring, b.backend)));
    reports
}

pub fn all_pass(reports: &[VerifyReport]) -> bool {
    reports.iter().all(|r| r.pass)
}

/// The versioned JSON document for a run.
pub fn report_json(cfg: &SuiteConfig, reports: &[VerifyReport]) -> Value {
    let passed = reports.iter().filter(|r| r.pass).count();
    json!({
        "schema": SCHEMA,
        "config": cfg,
        "reports": reports,
        "summary": {
            "total": reports.len(),
            "passed": passed,
            "failed": reports.len() - passed,
        },
    })
}

/// Reads the reports back out of a [`report_json`] document.
pub fn parse_report(v: &Value) -> Result<Vec<VerifyReport>, HarnessError> {
    match v.get("schema").and_then(Value::as_str) {
        Some(SCHEMA) => {}
        Some(other) => return Err(HarnessError::Report(format!("unsupported schema {other:?}"))),
        None => return Err(HarnessError::Report("missing \"schema\"".into())),
    }
    let reports = v.get("reports").cloned().ok_or_else(|| HarnessError::Report("missing \"reports\"".into()))?;
    serde_json::from_value(reports).map_err(|e| HarnessError::Report(e.to_string()))
}

/// Markdown table: theorem → status.
pub fn render_markdown(reports: &[VerifyReport]) -> String {
    let mut out = String::from("| Theorem | Ring | Backend | Trials | Max residual | Tolerance | Status |\n");
    out.push_str("|---|---|---|---:|---:|---:|---|\n");
    for r in reports {
        let resid = r.max_residual.map_or_else(|| "—".to_string(), |m| format!("{m:.3e}"));
        let status = if r.pass {
            "pass".to_string()
        } else if r.vacuous {
            "FAIL (vacuous)".to_string()
        } else if let Some(e) = &r.error {
            format!("FAIL ({})", e.replace('|', "\\|"))
        } else {
            "FAIL".to_string()
        };
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {:.0e} | {} |\n",
            r.id, r.ring, r.backend, r.trials, resid, r.tolerance, status
        ));
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    out.push_str(&format!("\n{passed}/{} passed\n", reports.len()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_filter_semantics() {
        assert!(theorem_matches("Lemma 4.1.8(3)", "Lemma 4.1.8"));
        assert!(theorem_matches("Theorem 4.1.7 [kernel]", "Theorem 4.1.7"));
        assert!(theorem_matches("Theorem 4.1.7 [kernel]", "Theorem 4.1.7 [kernel]"));
        assert!(!theorem_matches("Lemma 4.1.80", "Lemma 4.1.8"));
        assert!(!theorem_matches("Theorem 3.1", "Theorem 3"));
    }

    #[test]
    fn registry_ids_are_unique_per_ring() {
        let reg = registry();
        let mut keys: Vec<_> = reg.iter().map(|s| (s.id, s.ring)).collect();
        keys.sort();
        let n = keys.len();
        keys.dedup();
        assert_eq!(keys.len(), n);
        assert!(reg.iter().all(|s| !s.backends().is_empty()));
    }

    #[test]
    fn lemma_filter_selects_eight_cells() {
        let cfg = SuiteConfig { theorem: Some("Lemma 4.1.8".into()), ..Default::default() };
        assert_eq!(select(&cfg).len(), 8);
    }

    #[test]
    fn zero_trials_is_a_vacuous_failure() {
        let cfg = SuiteConfig { theorem: Some("Lemma 3.4".into()), trials: Some(0), ..Default::default() };
        let reps = verify(&cfg);
        assert_eq!(reps.len(), 3);
        for r in &reps {
            assert!(r.vacuous && !r.pass && r.max_residual.is_none());
        }
        assert!(!all_pass(&reps));
    }

    #[test]
    fn cell_seeds_differ_and_are_stable() {
        let a = cell_seed(1, "Lemma 3.4(1)", RingTag::RC, Backend::Exact);
        assert_eq!(a, cell_seed(1, "Lemma 3.4(1)", RingTag::RC, Backend::Exact));
        assert_ne!(a, cell_seed(2, "Lemma 3.4(1)", RingTag::RC, Backend::Exact));
        assert_ne!(a, cell_seed(1, "Lemma 3.4(2)", RingTag::RC, Backend::Exact));
        assert_ne!(a, cell_seed(1, "Lemma 3.4(1)", RingTag::RC, Backend::Float));
    }

    #[test]
    fn json_and_markdown_round_trip() {
        let cfg = SuiteConfig { theorem: Some("Lemma 3.4".into()), trials: Some(5), ..Default::default() };
        let reps = verify(&cfg);
        let doc = report_json(&cfg, &reps);
        assert_eq!(doc["schema"], SCHEMA);
        assert_eq!(parse_report(&doc).unwrap(), reps);
        let md = render_markdown(&reps);
        assert!(md.contains("| Lemma 3.4(2) | RC | exact | 5 |"));
        assert!(md.ends_with("3/3 passed\n"));
        assert!(parse_report(&json!({"schema": "other"})).is_err());
    }

    #[test]
    fn determinism() {
        let cfg = SuiteConfig { theorem: Some("Lemma 4.1.8".into()), trials: Some(4), backend: Some(Backend::Float), ..Default::default() };
        let a = serde_json::to_string(&report_json(&cfg, &verify(&cfg))).unwrap();
        let b = serde_json::to_string(&report_json(&cfg, &verify(&cfg))).unwrap();
        assert_eq!(a, b);
    }
}
