//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Built with `harness = false`; run with
//! `cargo test --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use jordan_e6::algebra::RingTag;
use jordan_e6::algorithms::{diag_idempotent, euclidean_part_dim, lie_dim, IdempotentCase, LieField};
use jordan_e6::field::Exact;
use jordan_e6::harness::{self, planted_idempotent, Backend, SuiteConfig, VerifyReport};

type Outcome = (bool, String);

fn run(ids: &[&str]) -> Vec<VerifyReport> {
    ids.iter()
        .flat_map(|id| harness::verify(&SuiteConfig { theorem: Some((*id).to_string()), ..SuiteConfig::default() }))
        .collect()
}

/// Every report passes and satisfies `extra`; an empty selection fails.
fn judge(reports: &[VerifyReport], expected: usize, extra: impl Fn(&VerifyReport) -> Option<String>) -> Outcome {
    let mut problems = Vec::new();
    if reports.len() != expected {
        problems.push(format!("expected {expected} suites, ran {}", reports.len()));
    }
    for r in reports {
        if !r.pass {
            problems.push(format!("{} [{}] failed (residual {:?}, error {:?})", r.id, r.ring, r.max_residual, r.error));
        }
        if let Some(p) = extra(r) {
            problems.push(format!("{} [{}]: {p}", r.id, r.ring));
        }
    }
    let trials: usize = reports.iter().map(|r| r.trials).sum();
    let summary = format!("{}/{} suites, {trials} trials", reports.iter().filter(|r| r.pass).count(), reports.len());
    if problems.is_empty() {
        (true, summary)
    } else {
        (false, format!("{summary}; {}", problems.join("; ")))
    }
}

fn exact_zero(r: &VerifyReport) -> Option<String> {
    if r.backend != Backend::Exact {
        return Some(format!("ran on {} backend", r.backend));
    }
    (r.max_residual != Some(0.0)).then(|| format!("residual {:?} is not exactly zero", r.max_residual))
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn lie_dimensions() -> Outcome {
    let limit = Duration::from_secs(60);
    let mut notes = Vec::new();
    let mut ok = true;
    let cases = [(RingTag::CC, LieField::Complex, 16), (RingTag::HC, LieField::Real, 35), (RingTag::RC, LieField::Complex, 8)];
    for (ring, field, want) in cases {
        let (res, dt) = timed(|| lie_dim::<Exact>(ring, field, 1));
        match res {
            Ok(r) => {
                ok &= r.nullity == want && dt <= limit;
                notes.push(format!("{ring}/{field} = {} ({:.1}s)", r.nullity, dt.as_secs_f64()));
                if ring == RingTag::HC {
                    let d = euclidean_part_dim(&r);
                    ok &= d == 14;
                    notes.push(format!("euclidean part = {d}"));
                }
            }
            Err(e) => {
                ok = false;
                notes.push(format!("{ring}/{field}: {e}"));
            }
        }
    }
    (ok, notes.join(", "))
}

fn kernels() -> Outcome {
    let reports = run(&["Theorem 3.1 [kernel]", "Theorem 4.1.3 [kernel]", "Theorem 4.1.7 [kernel]", "Theorem 5.1.1 [kernel]"]);
    judge(&reports, 4, |r| {
        // Kernel elements plus 100 sampled non-kernel elements.
        let kernel = match r.ring {
            RingTag::RC => 1,
            RingTag::HC => 2,
            _ => 3,
        };
        exact_zero(r).or_else(|| (r.trials < kernel + 100).then(|| format!("only {} trials", r.trials)))
    })
}

fn identities() -> Outcome {
    let reports = run(&[
        "Lemma 3.4",
        "Lemma 4.1.8",
        "Lemma 5.1.2",
        "Lemma 5.2.2",
        "Lemma 5.3.3",
        "Lemma 5.4.2",
        "Theorem 4.1.7 [h det]",
        "Theorem 4.1.7 [h star]",
        "Theorem 4.1.7 [h product]",
        "Theorem 4.1.3 [semidirect]",
        "Theorem 4.1.7 [semidirect]",
        "Theorem 5.3.5 [semidirect]",
        "Cross product",
        "Lemma 5.5.3",
    ]);
    judge(&reports, 37, |r| exact_zero(r).or_else(|| (r.trials < 200).then(|| format!("only {} trials", r.trials))))
}

fn group_actions() -> Outcome {
    let reports = run(&[
        "Theorem 3.1 [action]",
        "Theorem 3.2",
        "Proposition 3.3",
        "Theorem 3.5",
        "Proposition 3.6",
        "Theorem 3.7",
        "Theorem 4.1.3 [action]",
        "Theorem 4.1.7 [action]",
        "Theorem 4.2.1",
        "Theorem 4.3.2",
        "Theorem 4.4.1",
        "Theorem 4.5.1",
        "Theorem 5.1.1 [action]",
        "Theorem 5.2.1",
        "Theorem 5.3.2",
        "Theorem 5.4.1",
        "Theorem 5.5.1",
    ]);
    judge(&reports, 17, |r| {
        if r.trials < 500 {
            return Some(format!("only {} trials", r.trials));
        }
        match r.backend {
            Backend::Exact => exact_zero(r),
            Backend::Float => (r.tolerance > 1e-9).then(|| format!("tolerance {}", r.tolerance)),
        }
    })
}

fn algorithms() -> Outcome {
    let ((reports, cases), dt) = timed(|| {
        let reports = run(&["Lemma 4.1.1", "Cube root", "Theorem 4.1.6", "Proposition 4.1.4"]);
        // Which branch the idempotent algorithm takes on the planted inputs.
        let mut cases = BTreeSet::new();
        for t in 0..500 {
            let mut rng = ChaCha8Rng::seed_from_u64(t as u64);
            let (x, target, _) = planted_idempotent(&mut rng, t);
            if let Ok(r) = diag_idempotent(&x, target) {
                cases.insert(match r.case {
                    IdempotentCase::Diagonal => "diagonal",
                    IdempotentCase::OffDiagonalB1 { .. } => "B1",
                    IdempotentCase::OffDiagonalB2 { .. } => "B2",
                });
            }
        }
        (reports, cases)
    });
    let want = [("Lemma 4.1.1", 500, 1e-8), ("Cube root", 1000, 1e-10), ("Theorem 4.1.6", 200, 1e-7), ("Proposition 4.1.4", 200, 1e-7)];
    let (mut ok, mut note) = judge(&reports, 4, |r| {
        let (_, trials, tol) = want.iter().find(|(p, ..)| r.id.starts_with(p))?;
        (r.trials < *trials || r.tolerance > *tol).then(|| format!("{} trials at tolerance {}", r.trials, r.tolerance))
    });
    ok &= cases.len() == 3 && dt <= Duration::from_secs(300);
    note.push_str(&format!("; idempotent branches {cases:?}; {:.1}s", dt.as_secs_f64()));
    (ok, note)
}

fn split_transport() -> Outcome {
    let reports = run(&["Proposition 4.3.1", "Proposition 5.3.1", "Theorem 4.3.4"]);
    judge(&reports, 3, |r| {
        if r.id.starts_with("Proposition") && r.trials < 100 {
            return Some(format!("only {} trials", r.trials));
        }
        (r.backend == Backend::Float && r.tolerance > 1e-9).then(|| format!("tolerance {}", r.tolerance))
    })
}

fn negative_checks() -> Outcome {
    let reports = run(&["Theorem 5.2.3", "Theorem 5.4.3"]);
    judge(&reports, 2, |r| (r.trials < 500).then(|| format!("only {} trials", r.trials)))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("Lie algebra dimensions", lie_dimensions),
        ("kernel suites", kernels),
        ("identity suites", identities),
        ("group action suites", group_actions),
        ("constructive algorithms", algorithms),
        ("split-form transport", split_transport),
        ("negative checks", negative_checks),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let ((ok, note), dt) = timed(f);
        all &= ok;
        println!("criterion {}: {} {name} ({note}) [{:.1}s]", i + 1, if ok { "PASS" } else { "FAIL" }, dt.as_secs_f64());
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
