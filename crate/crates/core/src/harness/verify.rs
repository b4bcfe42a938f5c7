use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::cohom::{CohomProfile, LocalCohomologyTable};
use crate::error::AlgebraError;
use crate::groebner::{Ideal, MonomialIdeal};
use crate::poly::TermOrder;
use crate::resolve::{free_resolution, hilbert_series, monomial_hilbert_series, BettiTable, FreeResolution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIPPED",
        })
    }
}

/// One named verdict with its reason.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub reason: String,
}

impl Check {
    pub fn new(name: impl Into<String>, verdict: Verdict, reason: impl Into<String>) -> Self {
        Check { name: name.into(), verdict, reason: reason.into() }
    }

    /// PASS when `ok`, FAIL otherwise.
    pub fn expect(name: impl Into<String>, ok: bool, reason: impl Into<String>) -> Self {
        Check::new(name, if ok { Verdict::Pass } else { Verdict::Fail }, reason)
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Check::new(name, Verdict::Skipped, reason)
    }
}

/// Both sides of one Gröbner degeneration, with every verdict.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub fixture: String,
    pub field: String,
    pub order: String,
    pub initial_ideal: Vec<String>,
    pub squarefree: bool,
    pub checks: Vec<Check>,
    pub betti_ideal: Option<BettiTable>,
    pub betti_initial: Option<BettiTable>,
    pub lc_ideal: Option<LocalCohomologyTable>,
    pub lc_initial: Option<LocalCohomologyTable>,
    /// Wall-clock per stage; never serialized, so reports stay byte-stable.
    #[serde(skip)]
    pub timings: Vec<(String, Duration)>,
}

impl VerificationReport {
    pub fn empty(fixture: impl Into<String>) -> Self {
        VerificationReport {
            fixture: fixture.into(),
            field: String::new(),
            order: String::new(),
            initial_ideal: Vec::new(),
            squarefree: false,
            checks: Vec::new(),
            betti_ideal: None,
            betti_initial: None,
            lc_ideal: None,
            lc_initial: None,
            timings: Vec::new(),
        }
    }

    pub fn has_failure(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == Verdict::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    /// Runs `f`, recording its wall-clock time under `stage`.
    pub fn timed<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let t = Instant::now();
        let out = f();
        self.timings.push((stage.to_string(), t.elapsed()));
        out
    }

    pub fn total_time(&self) -> Duration {
        self.timings.iter().map(|(_, d)| *d).sum()
    }
}

fn regularity(res: &FreeResolution) -> i64 {
    (0..=res.length()).flat_map(|k| res.degrees(k).iter().map(move |&a| a - k as i64)).max().unwrap_or(0)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Compares `S/I` with `S/in(I)`: equalities when `in(I)` is square-free,
/// the inequalities always.
pub fn verify_degeneration(fixture: &str, ideal: &Ideal, order: &TermOrder) -> VerificationReport {
    let mut rep = VerificationReport::empty(fixture);
    rep.field = ideal.ring().field().to_string();
    rep.order = order.to_string();
    if let Err(e) = run(&mut rep, ideal, order) {
        rep.push(Check::new("computation", Verdict::Fail, e.to_string()));
    }
    rep
}

fn run(rep: &mut VerificationReport, ideal: &Ideal, order: &TermOrder) -> Result<(), AlgebraError> {
    let ring = ideal.ring().clone();
    let n = ring.nvars();
    let init: MonomialIdeal = rep.timed("initial", || ideal.initial_ideal(order));
    rep.initial_ideal = init.generator_strings();
    rep.squarefree = init.is_squarefree();
    rep.push(if rep.squarefree {
        Check::new("initial-squarefree", Verdict::Pass, format!("{} generators", init.len()))
    } else {
        let bad: Vec<String> = init.generators().iter().filter(|m| !m.is_squarefree()).map(|m| m.display_with(ring.names())).collect();
        Check::skipped("initial-squarefree", format!("not square-free: {}", bad.join(", ")))
    });

    let hs = rep.timed("hilbert", || hilbert_series(ideal))?;
    let hs0 = monomial_hilbert_series(&init);
    rep.push(Check::expect("hilbert-series", hs == hs0, format!("{hs}")));

    let init_ideal = init.to_ideal();
    let res_i = rep.timed("resolve-ideal", || free_resolution(ideal))?;
    let res_j = rep.timed("resolve-initial", || free_resolution(&init_ideal))?;
    let bi = BettiTable::from_resolution(&res_i);
    let bj = BettiTable::from_resolution(&res_j);
    rep.push(Check::expect("betti-inequality", bi.is_bounded_by(&bj), "beta_ij(S/I) <= beta_ij(S/in(I))"));

    let reg = regularity(&res_i).max(regularity(&res_j));
    let window = (-(n as i64 + reg), reg);
    let li = rep.timed("ext-ideal", || LocalCohomologyTable::from_resolution(&res_i, Some(window)))?;
    let lj = rep.timed("ext-initial", || LocalCohomologyTable::from_resolution(&res_j, Some(window)))?;
    rep.push(Check::expect(
        "lc-inequality",
        li.is_bounded_by(&lj),
        format!("h^ij(S/I) <= h^ij(S/in(I)) for j in [{}, {}]", window.0, window.1),
    ));

    if rep.squarefree {
        for k in 0..=n {
            let (a, b) = (&li.exts[k].series, &lj.exts[k].series);
            let reason = if a == b { format!("{a}") } else { format!("{a} vs {b}") };
            rep.push(Check::expect(format!("ext-series[{k}]"), a == b, reason));
        }
        let (ei, ej) = (bi.extremal(), bj.extremal());
        rep.push(Check::expect("extremal-betti", ei == ej, format!("{:?}", ei.iter().map(|e| (e.i, e.k, e.value)).collect::<Vec<_>>())));
        let (di, dj) = (n - bi.projective_dimension(), n - bj.projective_dimension());
        rep.push(Check::expect("depth", di == dj, format!("{di} vs {dj}")));
        let (ri, rj) = (bi.regularity(), bj.regularity());
        rep.push(Check::expect("regularity", ri == rj, format!("{ri} vs {rj}")));
        let (pi, pj) = (CohomProfile::from_table(&li), CohomProfile::from_table(&lj));
        let agree = |name: &str, f: &dyn Fn(&CohomProfile) -> bool, rep: &mut VerificationReport| {
            let (a, b) = (f(&pi), f(&pj));
            rep.push(Check::expect(name, a == b, format!("{} / {}", yes_no(a), yes_no(b))));
        };
        agree("cohen-macaulay", &|p| p.is_cohen_macaulay(), rep);
        agree("generalized-cm", &|p| p.is_generalized_cm(), rep);
        agree("pure", &|p| p.is_pure(), rep);
        for r in 2..=n.max(2) {
            agree(&format!("serre[{r}]"), &|p| p.satisfies_serre(r).unwrap_or(false), rep);
        }
        for c in 0..=n {
            agree(&format!("cm-codim[{c}]"), &|p| p.is_cm_in_codim(c), rep);
        }
    } else {
        for name in ["ext-series", "extremal-betti", "depth", "regularity", "condition-agreement"] {
            rep.push(Check::skipped(name, "in(I) is not square-free"));
        }
    }
    rep.betti_ideal = Some(bi);
    rep.betti_initial = Some(bj);
    rep.lc_ideal = Some(li);
    rep.lc_initial = Some(lj);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, PolyRing};

    #[test]
    fn twisted_cubic_lex_passes() {
        let r = PolyRing::standard(4, Field::Rationals);
        let i = Ideal::parse(&r, &["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"]).unwrap();
        let rep = verify_degeneration("twisted-cubic", &i, &TermOrder::Lex);
        assert!(rep.squarefree);
        assert!(!rep.has_failure(), "{:?}", rep.checks);
        assert_eq!(rep.check("ext-series[2]").unwrap().verdict, Verdict::Pass);
        assert_eq!(rep.check("serre[2]").unwrap().reason, "yes / yes");
    }

    #[test]
    fn non_squarefree_runs_inequalities_only() {
        let r = PolyRing::standard(4, Field::Rationals);
        let i = Ideal::parse(&r, &["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"]).unwrap();
        let rep = verify_degeneration("twisted-cubic", &i, &TermOrder::DegRevLex);
        assert!(!rep.squarefree && !rep.has_failure());
        assert_eq!(rep.check("depth").unwrap().verdict, Verdict::Skipped);
        assert_eq!(rep.check("lc-inequality").unwrap().verdict, Verdict::Pass);
    }
}
