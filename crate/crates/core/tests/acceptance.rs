//! Exit gate: one PASS/FAIL line per criterion, then a nonzero exit if any fails.
//!
//! Everything runs once: the bundled fixture suite over Q with the default
//! seed, plus 20 seeded random complexes for the oracle triangle.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use degenlab::harness::{oracle_triangle, run_paper_suite, SuiteOptions, Verdict, VerificationReport};
use degenlab::poly::{Field, PolyRing};
use degenlab::simplicial::{sr_ideal, SimplicialComplex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RANDOM_COMPLEXES: usize = 20;
const COMPLEX_SEED: u64 = 0x5eed;

struct Outcome {
    pass: bool,
    detail: String,
}

fn min(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

fn elapsed(r: &VerificationReport) -> Duration {
    r.timings.iter().find(|(k, _)| k == "total").map_or_else(|| r.total_time(), |(_, d)| *d)
}

fn find<'a>(reports: &'a [VerificationReport], id: &str) -> Option<&'a VerificationReport> {
    reports.iter().find(|r| r.fixture == id)
}

/// FAIL verdicts and timeouts. Checks that only apply to square-free
/// degenerations are SKIPPED otherwise and do not count.
fn failing(r: &VerificationReport) -> Vec<String> {
    r.checks
        .iter()
        .filter(|c| c.verdict == Verdict::Fail || c.name == "timeout")
        .map(|c| format!("{}={}", c.name, c.verdict))
        .collect()
}

/// `id` ran within `cap` with no failing check.
fn clean(reports: &[VerificationReport], id: &str, cap: Duration) -> (bool, String) {
    let Some(r) = find(reports, id) else { return (false, format!("{id}: missing")) };
    let bad = failing(r);
    let t = elapsed(r);
    let ok = bad.is_empty() && t <= cap;
    let mut s = format!("{id} {t:.1?}");
    if !bad.is_empty() {
        s.push_str(&format!(" [{}]", bad.join(", ")));
    }
    (ok, s)
}

fn merge(parts: Vec<(bool, String)>) -> Outcome {
    Outcome { pass: parts.iter().all(|p| p.0), detail: parts.into_iter().map(|p| p.1).collect::<Vec<_>>().join("; ") }
}

fn passes(r: &VerificationReport, prefix: &str) -> bool {
    let mut any = false;
    for c in r.checks.iter().filter(|c| c.name.starts_with(prefix)) {
        if c.verdict != Verdict::Pass {
            return false;
        }
        any = true;
    }
    any
}

fn criterion_4(reports: &[VerificationReport]) -> Outcome {
    let mut ids = vec!["twisted-cubic".to_string(), "non-cm-prime".into(), "weighted-minors".into()];
    let graphs: Vec<String> =
        reports.iter().filter(|r| r.fixture.starts_with("binomial-edge-")).map(|r| r.fixture.clone()).collect();
    let enough = graphs.len() >= 10;
    ids.extend(graphs);
    let mut bad = Vec::new();
    for id in &ids {
        let ok = find(reports, id).is_some_and(|r| {
            r.squarefree && passes(r, "initial-squarefree") && passes(r, "ext-series[") && elapsed(r) <= min(10)
        });
        if !ok {
            bad.push(id.clone());
        }
    }
    Outcome {
        pass: enough && bad.is_empty(),
        detail: format!("{} fixtures, ext series equal for all k; failing {bad:?}", ids.len()),
    }
}

/// Random complex on `n <= 6` vertices, neither void nor the full simplex.
fn random_complex(rng: &mut ChaCha8Rng) -> SimplicialComplex {
    loop {
        let n = rng.gen_range(2..=6);
        let full = (1u64 << n) - 1;
        let k = rng.gen_range(1..=5);
        let facets: Vec<Vec<usize>> = (0..k)
            .map(|_| {
                let mask = rng.gen_range(1..=full);
                (0..n).filter(|v| mask >> v & 1 == 1).collect()
            })
            .collect();
        let delta = SimplicialComplex::new(n, &facets).expect("vertices in range");
        if !delta.facet_masks().contains(&full) {
            return delta;
        }
    }
}

fn criterion_5(reports: &[VerificationReport]) -> Outcome {
    let t = Instant::now();
    let mut fixture_checks = 0;
    let mut bad = Vec::new();
    for r in reports.iter().filter(|r| r.squarefree) {
        for c in r.checks.iter().filter(|c| c.name.ends_with("-oracle")) {
            fixture_checks += 1;
            if c.verdict != Verdict::Pass {
                bad.push(format!("{}:{}", r.fixture, c.name));
            }
        }
    }
    let missing: Vec<&str> = reports
        .iter()
        .filter(|r| r.squarefree && !r.checks.iter().any(|c| c.name == "hochster-oracle"))
        .map(|r| r.fixture.as_str())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(COMPLEX_SEED);
    for k in 0..RANDOM_COMPLEXES {
        let delta = random_complex(&mut rng);
        let ring = PolyRing::standard(delta.n_vertices(), Field::Rationals);
        let result = sr_ideal(&delta, &ring).and_then(|m| oracle_triangle(&m));
        match result {
            Ok(checks) if checks.iter().all(|c| c.verdict == Verdict::Pass) => {}
            Ok(_) => bad.push(format!("random#{k} {delta}")),
            Err(e) => bad.push(format!("random#{k} {delta}: {e}")),
        }
    }
    let oracle_time: Duration = reports
        .iter()
        .flat_map(|r| r.timings.iter().filter(|(k, _)| k == "oracles").map(|(_, d)| *d))
        .sum::<Duration>()
        + t.elapsed();
    Outcome {
        pass: bad.is_empty() && missing.is_empty() && oracle_time <= min(10),
        detail: format!(
            "{fixture_checks} fixture checks + {RANDOM_COMPLEXES} random complexes in {oracle_time:.1?}; \
             failing {bad:?}, without oracle {missing:?}"
        ),
    }
}

fn criterion_8(reports: &[VerificationReport]) -> Outcome {
    let mut bad = Vec::new();
    for r in reports {
        for name in ["betti-inequality", "lc-inequality"] {
            if !passes(r, name) {
                bad.push(format!("{}:{name}", r.fixture));
            }
        }
        if r.squarefree {
            for name in ["extremal-betti", "depth", "regularity"] {
                if r.check(name).map(|c| c.verdict) != Some(Verdict::Pass) {
                    bad.push(format!("{}:{name}", r.fixture));
                }
            }
        }
    }
    let sf = reports.iter().filter(|r| r.squarefree).count();
    Outcome {
        pass: bad.is_empty(),
        detail: format!("{} fixtures ({sf} square-free); failing {bad:?}", reports.len()),
    }
}

fn criterion_9(reports: &[VerificationReport]) -> Outcome {
    merge(
        ["twisted-cubic", "minors-2x3"]
            .into_iter()
            .map(|id| {
                let r = find(reports, id);
                let ok = r.is_some_and(|r| {
                    passes(r, "h-vector") && passes(r, "egh-witness") && elapsed(r) <= min(1)
                });
                let why = r.and_then(|r| r.check("egh-witness")).map_or("missing".into(), |c| c.reason.clone());
                (ok, format!("{id}: {why}"))
            })
            .collect(),
    )
}

fn main() -> ExitCode {
    let opts = SuiteOptions::default();
    let t = Instant::now();
    let reports = run_paper_suite(&opts);
    println!("suite: {} fixtures in {:.1?}", reports.len(), t.elapsed());

    let criteria: Vec<(u8, &str, Outcome)> = vec![
        (1, "lex determinantal fixture", merge(vec![clean(&reports, "determinantal-lex", min(5))])),
        (2, "degrevlex determinantal fixture", merge(vec![clean(&reports, "determinantal-revlex", min(30))])),
        (3, "generic 4x4 initial ideal and gin", merge(vec![clean(&reports, "generic-4x4", min(30))])),
        (4, "square-free degenerations preserve Ext", criterion_4(&reports)),
        (5, "oracle triangle", criterion_5(&reports)),
        (6, "cohomological dimension example", merge(vec![clean(&reports, "cd-example", min(2))])),
        (7, "non-CM prime and Knutson closure", merge(vec![clean(&reports, "non-cm-prime", min(10))])),
        (8, "Betti and h^ij inequalities", criterion_8(&reports)),
        (9, "EGH witnesses for ASL fixtures", criterion_9(&reports)),
    ];

    let mut failed = 0;
    for (k, title, o) in &criteria {
        let v = if o.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!o.pass);
        println!("criterion {k}: {v}  {title}  ({})", o.detail);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
