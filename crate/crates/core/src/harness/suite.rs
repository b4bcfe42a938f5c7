//! The bundled regression corpus and a work-pool runner with per-fixture
//! timeouts. Reports come back in fixture order whatever the scheduling.

use std::collections::{BTreeSet, VecDeque};
use std::sync::{mpsc, Mutex};
use std::thread;
use std::time::{Duration, Instant};

use super::knutson::knutson_closure;
use super::oracle::oracle_triangle;
use super::parse::{parse_ideal_text, IdealFile};
use super::verify::{verify_degeneration, Check, Verdict, VerificationReport};
use crate::cohom::{cohomological_dimension_squarefree, CohomProfile};
use crate::error::AlgebraError;
use crate::groebner::{generic_initial_ideal, GinOptions, Ideal, MonomialIdeal};
use crate::poly::{Field, Monomial, PolyRing, Polynomial, TermOrder};
use crate::resolve::{hilbert_series, invariants};
use crate::simplicial::{
    asl_discrete_monomial_ideal, face_vectors, is_f_vector, minimal_primes_squarefree, sr_ideal, squarefree_dual_graph,
    Poset,
};

pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(30 * 60);
pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_KNUTSON_BUDGET: usize = 40;

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Overrides every fixture's declared field.
    pub field: Option<Field>,
    pub seed: u64,
    pub timeout: Duration,
    pub threads: usize,
    pub knutson_budget: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            field: None,
            seed: DEFAULT_SEED,
            timeout: DEFAULT_TIMEOUT,
            threads: thread::available_parallelism().map_or(1, |n| n.get()),
            knutson_budget: DEFAULT_KNUTSON_BUDGET,
        }
    }
}

type Job = Box<dyn FnOnce() -> VerificationReport + Send + 'static>;

/// One named unit of work producing a report.
pub struct Fixture {
    pub id: String,
    job: Job,
}

impl Fixture {
    pub fn new(id: impl Into<String>, job: impl FnOnce() -> VerificationReport + Send + 'static) -> Self {
        Fixture { id: id.into(), job: Box::new(job) }
    }

    /// Verification of an ideal file under its own order, plus its
    /// `expect-initial` list and the oracle triangle when square-free.
    pub fn from_text(id: impl Into<String>, text: impl Into<String>, field: Option<Field>) -> Self {
        let id = id.into();
        let text = text.into();
        let name = id.clone();
        Fixture::new(id, move || with_file(&name, &text, field, |_, _| Ok(())))
    }
}

impl std::fmt::Debug for Fixture {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Fixture").field("id", &self.id).finish_non_exhaustive()
    }
}

/// Runs `fixtures` on `opts.threads` workers. A fixture that panics gets a
/// FAIL report; one exceeding `opts.timeout` gets a SKIPPED `timeout` check.
pub fn run_fixtures(fixtures: Vec<Fixture>, opts: &SuiteOptions) -> Vec<VerificationReport> {
    let n = fixtures.len();
    let queue: Mutex<VecDeque<(usize, Fixture)>> = Mutex::new(fixtures.into_iter().enumerate().collect());
    let results: Mutex<Vec<Option<VerificationReport>>> = Mutex::new(vec![None; n]);
    thread::scope(|s| {
        for _ in 0..opts.threads.clamp(1, n.max(1)) {
            s.spawn(|| loop {
                let Some((k, fx)) = queue.lock().expect("queue lock").pop_front() else { break };
                let rep = run_one(fx, opts.timeout);
                results.lock().expect("results lock")[k] = Some(rep);
            });
        }
    });
    results.into_inner().expect("results lock").into_iter().map(|r| r.expect("every fixture reports")).collect()
}

fn run_one(fx: Fixture, timeout: Duration) -> VerificationReport {
    let (tx, rx) = mpsc::channel();
    let id = fx.id.clone();
    let start = Instant::now();
    // detached: a timed-out computation cannot be cancelled, only abandoned
    let spawned = thread::Builder::new().name(id.clone()).spawn(move || {
        let _ = tx.send((fx.job)());
    });
    let mut rep = match spawned.map_err(|e| e.to_string()).map(|_| rx.recv_timeout(timeout)) {
        Ok(Ok(mut rep)) => {
            rep.fixture = id;
            return rep;
        }
        Ok(Err(mpsc::RecvTimeoutError::Timeout)) => {
            let mut r = VerificationReport::empty(&id);
            r.push(Check::skipped("timeout", format!("exceeded {} s", timeout.as_secs())));
            r
        }
        Ok(Err(mpsc::RecvTimeoutError::Disconnected)) => {
            let mut r = VerificationReport::empty(&id);
            r.push(Check::new("panic", Verdict::Fail, "fixture aborted"));
            r
        }
        Err(e) => {
            let mut r = VerificationReport::empty(&id);
            r.push(Check::new("spawn", Verdict::Fail, e));
            r
        }
    };
    rep.timings.push(("total".into(), start.elapsed()));
    rep
}

/// Every bundled fixture.
pub fn paper_fixtures(opts: &SuiteOptions) -> Vec<Fixture> {
    let field = opts.field;
    let (seed, budget) = (opts.seed, opts.knutson_budget);
    let mut out = vec![
        Fixture::new("determinantal-lex", move || with_file("determinantal-lex", DETERMINANTAL_LEX, field, determinantal_lex)),
        Fixture::new("determinantal-revlex", move || {
            with_file("determinantal-revlex", DETERMINANTAL_REVLEX, field, determinantal_revlex)
        }),
        Fixture::new("generic-4x4", move || with_file("generic-4x4", GENERIC_4X4, field, |f, r| generic_4x4(f, r, seed))),
        Fixture::new("weighted-minors", move || with_file("weighted-minors", WEIGHTED_MINORS, field, expect_squarefree)),
        Fixture::new("cd-example", move || with_file("cd-example", CD_EXAMPLE, field, cd_example)),
        Fixture::new("non-cm-prime", move || {
            with_file("non-cm-prime", NON_CM_PRIME, field, |f, r| non_cm_prime(f, r, field, budget))
        }),
        Fixture::new("coordinate-product", move || with_file("coordinate-product", COORDINATE_PRODUCT, field, coordinate_product)),
        Fixture::new("twisted-cubic", move || with_file("twisted-cubic", TWISTED_CUBIC, field, |f, r| asl(f, r, &fence_poset()))),
        Fixture::new("minors-2x3", move || with_file("minors-2x3", MINORS_2X3, field, |f, r| asl(f, r, &grid_poset(2, 3)))),
    ];
    for (name, n, edges) in GRAPHS {
        let id = format!("binomial-edge-{name}");
        let rid = id.clone();
        out.push(Fixture::new(id, move || {
            let field = field.unwrap_or(Field::Rationals);
            match binomial_edge_ideal(*n, edges, field) {
                Ok(i) => {
                    let mut rep = verify_degeneration(&rid, &i, &TermOrder::Lex);
                    guarded(&mut rep, |r| {
                        expect_squarefree_report(r);
                        oracle(&i, &TermOrder::Lex, r)
                    });
                    rep
                }
                Err(e) => failed(&rid, "construction", e),
            }
        }));
    }
    out
}

pub fn run_paper_suite(opts: &SuiteOptions) -> Vec<VerificationReport> {
    run_fixtures(paper_fixtures(opts), opts)
}

pub const TWISTED_CUBIC: &str = include_str!("../../fixtures/twisted_cubic.ideal");
pub const MINORS_2X3: &str = include_str!("../../fixtures/minors_2x3.ideal");
pub const DETERMINANTAL_LEX: &str = include_str!("../../fixtures/determinantal_lex.ideal");
pub const DETERMINANTAL_REVLEX: &str = include_str!("../../fixtures/determinantal_revlex.ideal");
pub const GENERIC_4X4: &str = include_str!("../../fixtures/generic_4x4.ideal");
pub const WEIGHTED_MINORS: &str = include_str!("../../fixtures/weighted_minors.ideal");
pub const CD_EXAMPLE: &str = include_str!("../../fixtures/cd_example.ideal");
pub const NON_CM_PRIME: &str = include_str!("../../fixtures/non_cm_prime.ideal");
pub const NON_CM_PRIME_KNUTSON: &str = include_str!("../../fixtures/non_cm_prime_knutson.ideal");
pub const COORDINATE_PRODUCT: &str = include_str!("../../fixtures/coordinate_product.ideal");

/// Graphs on at most five vertices, 0-based edge lists.
pub const GRAPHS: &[(&str, usize, &[(usize, usize)])] = &[
    ("path3", 3, &[(0, 1), (1, 2)]),
    ("path4", 4, &[(0, 1), (1, 2), (2, 3)]),
    ("path5", 5, &[(0, 1), (1, 2), (2, 3), (3, 4)]),
    ("triangle", 3, &[(0, 1), (0, 2), (1, 2)]),
    ("complete4", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    ("complete5", 5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    ("cycle4", 4, &[(0, 1), (1, 2), (2, 3), (0, 3)]),
    ("cycle5", 5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
    ("claw", 4, &[(0, 1), (0, 2), (0, 3)]),
    ("star5", 5, &[(0, 1), (0, 2), (0, 3), (0, 4)]),
    ("paw", 4, &[(0, 1), (0, 2), (1, 2), (2, 3)]),
    ("diamond", 4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    ("bull", 5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
];

/// `J_G = (x_i y_j - x_j y_i : {i, j} ∈ E)` in `K[x_1..x_n, y_1..y_n]`.
pub fn binomial_edge_ideal(n: usize, edges: &[(usize, usize)], field: Field) -> Result<Ideal, AlgebraError> {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).chain((1..=n).map(|i| format!("y{i}"))).collect();
    let ring = PolyRing::new(names, field)?;
    let gens = edges
        .iter()
        .map(|&(i, j)| {
            if i >= n || j >= n || i == j {
                return Err(AlgebraError::InvalidRing(format!("edge ({i}, {j}) on {n} vertices")));
            }
            let (x, y) = (ring.vars(), ring.vars());
            Ok(&(&x[i] * &y[n + j]) - &(&x[j] * &y[n + i]))
        })
        .collect::<Result<Vec<Polynomial>, _>>()?;
    Ok(Ideal::new(&ring, gens))
}

fn failed(id: &str, name: &str, e: AlgebraError) -> VerificationReport {
    let mut r = VerificationReport::empty(id);
    r.push(Check::new(name, Verdict::Fail, e.to_string()));
    r
}

/// Runs `f`, turning an error into a FAIL `computation` check.
fn guarded(rep: &mut VerificationReport, f: impl FnOnce(&mut VerificationReport) -> Result<(), AlgebraError>) {
    if let Err(e) = f(rep) {
        rep.push(Check::new("computation", Verdict::Fail, e.to_string()));
    }
}

fn with_file(
    id: &str,
    text: &str,
    field: Option<Field>,
    extra: impl FnOnce(&IdealFile, &mut VerificationReport) -> Result<(), AlgebraError>,
) -> VerificationReport {
    let file = match parse_ideal_text(text, field) {
        Ok(f) => f,
        Err(e) => return failed(id, "parse", e),
    };
    let mut rep = verify_file(id, &file, &file.order_or_default());
    guarded(&mut rep, |r| extra(&file, r));
    rep
}

/// `verify_degeneration`, the file's `expect-initial` list, and the oracle
/// triangle when in(I) is square-free. The list only binds under the file's
/// own order.
pub fn verify_file(id: &str, file: &IdealFile, order: &TermOrder) -> VerificationReport {
    let ideal = file.ideal();
    let mut rep = verify_degeneration(id, &ideal, order);
    guarded(&mut rep, |r| {
        if let Some(list) = &file.expect_initial {
            if *order == file.order_or_default() {
                r.push(initial_list_check(&ideal.initial_ideal(order), list)?);
            } else {
                r.push(Check::skipped("initial-list", format!("listed for {}", file.order_or_default())));
            }
        }
        oracle(&ideal, order, r)
    });
    rep
}

fn oracle(ideal: &Ideal, order: &TermOrder, rep: &mut VerificationReport) -> Result<(), AlgebraError> {
    if rep.squarefree {
        let t = Instant::now();
        for c in oracle_triangle(&ideal.initial_ideal(order))? {
            rep.push(c);
        }
        rep.timings.push(("oracles".into(), t.elapsed()));
    }
    Ok(())
}

/// The computed minimal generators are exactly `expected`, as a set.
fn initial_list_check(init: &MonomialIdeal, expected: &[String]) -> Result<Check, AlgebraError> {
    let ring = init.ring();
    let names = ring.names();
    let strs: Vec<&str> = expected.iter().map(String::as_str).collect();
    let exp: BTreeSet<String> = MonomialIdeal::parse(ring, &strs)?
        .generators()
        .iter()
        .map(|m| m.display_with(names))
        .collect();
    let got: BTreeSet<String> = init.generators().iter().map(|m| m.display_with(names)).collect();
    let missing: Vec<&String> = exp.difference(&got).collect();
    let extra: Vec<&String> = got.difference(&exp).collect();
    let ok = missing.is_empty() && extra.is_empty() && exp.len() == expected.len();
    let reason = if ok {
        format!("{} generators as listed", got.len())
    } else {
        format!(
            "{} computed, {} listed ({} distinct minimal); missing [{}]; extra [{}]",
            got.len(),
            expected.len(),
            exp.len(),
            missing.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(", "),
            extra.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(", ")
        )
    };
    Ok(Check::expect("initial-list", ok, reason))
}

fn expect_squarefree_report(rep: &mut VerificationReport) {
    let sq = rep.squarefree;
    rep.push(Check::expect("expected-squarefree", sq, if sq { "in(I) square-free" } else { "in(I) not square-free" }));
}

fn expect_squarefree(_: &IdealFile, rep: &mut VerificationReport) -> Result<(), AlgebraError> {
    expect_squarefree_report(rep);
    Ok(())
}

fn radical_depth(file: &IdealFile, rep: &mut VerificationReport, expected: usize) -> Result<MonomialIdeal, AlgebraError> {
    let rad = file.ideal().initial_ideal(&file.order_or_default()).radical();
    let inv = invariants(&rad.to_ideal())?;
    rep.push(Check::expect("radical-depth", inv.depth == expected, format!("depth S/rad(in(I)) = {}", inv.depth)));
    Ok(rad)
}

fn determinantal_lex(file: &IdealFile, rep: &mut VerificationReport) -> Result<(), AlgebraError> {
    let inv = invariants(&file.ideal())?;
    rep.push(Check::expect(
        "depth-equals-dim",
        inv.depth == 3 && inv.dim == Some(3),
        format!("depth {} / dim {:?}", inv.depth, inv.dim),
    ));
    radical_depth(file, rep, 2)?;
    Ok(())
}

fn determinantal_revlex(file: &IdealFile, rep: &mut VerificationReport) -> Result<(), AlgebraError> {
    let inv = invariants(&file.ideal())?;
    rep.push(Check::expect(
        "cohen-macaulay-dim-3",
        inv.is_cohen_macaulay() && inv.dim == Some(3),
        format!("depth {} / dim {:?}", inv.depth, inv.dim),
    ));
    radical_depth(file, rep, 2)?;
    Ok(())
}

/// `x_ij` for 1-based `(i, j)` in a ring named `x11 .. x44`.
fn entry(ring: &PolyRing, i: usize, j: usize) -> Result<usize, AlgebraError> {
    ring.index_of(&format!("x{i}{j}")).ok_or_else(|| AlgebraError::InvalidRing(format!("no variable x{i}{j}")))
}

fn degree_two_part(m: &MonomialIdeal) -> BTreeSet<Monomial> {
    m.generators().iter().filter(|g| g.total_degree() == 2).copied().collect()
}

fn show(ring: &PolyRing, s: &BTreeSet<Monomial>) -> String {
    s.iter().map(|m| m.display_with(ring.names())).collect::<Vec<_>>().join(", ")
}

fn generic_4x4(file: &IdealFile, rep: &mut VerificationReport, seed: u64) -> Result<(), AlgebraError> {
    let ideal = file.ideal();
    let ring = ideal.ring().clone();
    let order = file.order_or_default();
    let init = ideal.initial_ideal(&order);
    let mut formula = Vec::new();
    for i in 1..=4 {
        for h in i + 1..=4 {
            for j in 1..=4 {
                for k in 1..j {
                    formula.push(Monomial::squarefree([entry(&ring, i, j)?, entry(&ring, h, k)?]));
                }
            }
        }
    }
    let formula = MonomialIdeal::new(&ring, formula);
    rep.push(Check::expect("initial-formula", init == formula, format!("x_ij x_hk, i < h, j > k: {} generators", formula.len())));

    // gin(I)_2 = (x_ij : i <= 2)^2; gin(in(I))_2 trades x23 x24, x24^2 for x11 x31, x12 x31
    let top: Vec<usize> = (1..=2).flat_map(|i| (1..=4).map(move |j| (i, j))).map(|(i, j)| entry(&ring, i, j)).collect::<Result<_, _>>()?;
    let mut want_i = BTreeSet::new();
    for (a, &u) in top.iter().enumerate() {
        for &v in &top[a..] {
            want_i.insert(Monomial::var(u).mul(&Monomial::var(v)));
        }
    }
    let mut want_j = want_i.clone();
    let m = |a: (usize, usize), b: (usize, usize)| -> Result<Monomial, AlgebraError> {
        Ok(Monomial::var(entry(&ring, a.0, a.1)?).mul(&Monomial::var(entry(&ring, b.0, b.1)?)))
    };
    want_j.remove(&m((2, 3), (2, 4))?);
    want_j.remove(&m((2, 4), (2, 4))?);
    want_j.insert(m((1, 1), (3, 1))?);
    want_j.insert(m((1, 2), (3, 1))?);
    let opts = GinOptions { seed, trials: 3, max_degree: Some(2) };
    for (name, source, want) in [("gin-ideal-degree-2", ideal.clone(), &want_i), ("gin-initial-degree-2", init.to_ideal(), &want_j)] {
        let t = Instant::now();
        let gin = generic_initial_ideal(&source, &order, &opts);
        rep.timings.push((name.into(), t.elapsed()));
        let got = match (gin, ring.field()) {
            (Ok(g), _) => degree_two_part(&g),
            // random coordinates over a finite field need not be generic
            (Err(AlgebraError::GinUnstable), Field::Prime(p)) => {
                rep.push(Check::skipped(name, format!("trials disagree over F{p}: coordinates from a finite field are not generic")));
                continue;
            }
            (Err(e), _) => return Err(e),
        };
        let reason = if got == *want {
            format!("{} quadrics, 3 trials agree (seed {seed})", got.len())
        } else {
            let miss: BTreeSet<Monomial> = want.difference(&got).copied().collect();
            let extra: BTreeSet<Monomial> = got.difference(want).copied().collect();
            format!("missing [{}]; extra [{}]", show(&ring, &miss), show(&ring, &extra))
        };
        rep.push(Check::expect(name, got == *want, reason));
    }
    Ok(())
}

fn cd_example(file: &IdealFile, rep: &mut VerificationReport) -> Result<(), AlgebraError> {
    let ideal = file.ideal();
    let n = ideal.ring().nvars();
    let dim = hilbert_series(&ideal)?.dimension();
    let height = dim.map(|d| n - d);
    // height = number of generators: complete intersection, so cd(S, I) = 3
    rep.push(Check::expect(
        "complete-intersection",
        height == Some(3) && ideal.generators().len() == 3,
        format!("height {height:?}, {} generators", ideal.generators().len()),
    ));
    let rad = radical_depth(file, rep, 2)?;
    // P1..P4 as 0-based variable sets
    let named: [(&str, Vec<usize>); 4] =
        [("P1", vec![0, 1, 2]), ("P2", vec![0, 2, 5]), ("P3", vec![0, 1, 4]), ("P4", vec![0, 3, 4])];
    let primes = minimal_primes_squarefree(&rad)?;
    let got: BTreeSet<Vec<usize>> = primes.iter().cloned().collect();
    let want: BTreeSet<Vec<usize>> = named.iter().map(|(_, p)| p.clone()).collect();
    let intersection =
        named.iter().fold(MonomialIdeal::new(rad.ring(), vec![Monomial::one()]), |acc, (_, p)| acc.intersection(&MonomialIdeal::prime(rad.ring(), p)));
    rep.push(Check::expect("radical-primes", got == want && rad == intersection, format!("rad(in(I)) = {}", rad)));
    let cd = cohomological_dimension_squarefree(&rad)?;
    rep.push(Check::expect("cohomological-dimension", cd == 4, format!("cd(S, in(I)) = {cd}, cd(S, I) = 3")));

    let g = squarefree_dual_graph(&rad)?;
    let label = |v: usize| named.iter().find(|(_, p)| *p == primes[v]).map_or("?", |(l, _)| l);
    let mut edges: Vec<String> = g
        .edges
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (label(a), label(b));
            if x <= y {
                format!("{x}{y}")
            } else {
                format!("{y}{x}")
            }
        })
        .collect();
    edges.sort();
    rep.push(Check::expect("dual-graph-edges", edges == ["P1P2", "P1P3", "P3P4"], edges.join(" ")));
    let d = g.diameter();
    rep.push(Check::expect("dual-graph-diameter", d == Some(3), format!("{d:?}")));
    rep.push(Check::expect("hirsch", g.is_hirsch(), format!("diameter {d:?} <= height {}", g.height)));
    Ok(())
}

fn non_cm_prime(file: &IdealFile, rep: &mut VerificationReport, field: Option<Field>, budget: usize) -> Result<(), AlgebraError> {
    expect_squarefree_report(rep);
    let p = file.ideal();
    let n = p.ring().nvars();
    let gh = Ideal::new(p.ring(), p.generators()[..2].to_vec());
    rep.push(Check::expect("contains-gh", p.contains_ideal(&gh)?, "p ⊇ (g, h)"));
    let inv = invariants(&p)?;
    rep.push(Check::expect(
        "height-dim-depth",
        inv.dim == Some(3) && inv.depth == 2 && n - 3 == 2,
        format!("height 2, dim {:?}, depth {} (not CM)", inv.dim, inv.depth),
    ));
    if let (Some(li), Some(lj)) = (&rep.lc_ideal, &rep.lc_initial) {
        let (a, b) = (CohomProfile::from_table(li).satisfies_serre(2), CohomProfile::from_table(lj).satisfies_serre(2));
        rep.push(Check::expect("serre-2-fails", a == Some(false) && b == Some(false), format!("S_2: {a:?} / {b:?}")));
    }

    let kf = parse_ideal_text(NON_CM_PRIME_KNUTSON, field)?;
    let f = kf.generators.first().ok_or_else(|| AlgebraError::Internal("no f".into()))?;
    let order = kf.order_or_default();
    if let Some(list) = &kf.expect_initial {
        let mut c = initial_list_check(&kf.ideal().initial_ideal(&order), list)?;
        c.name = "initial-f".into();
        rep.push(c);
    }
    let t = Instant::now();
    let fam = knutson_closure(f, &order, &kf.seed_ideals(), &kf.colon_ideals(), budget)?;
    rep.timings.push(("knutson".into(), t.elapsed()));
    rep.push(Check::expect(
        "knutson-squarefree",
        fam.is_sound() && fam.all_initial_squarefree(),
        format!(
            "{} members{}{}",
            fam.members.len(),
            if fam.budget_exhausted { ", budget exhausted" } else { "" },
            fam.violations.iter().map(|v| format!("; {v}")).collect::<String>()
        ),
    ));
    Ok(())
}

fn coordinate_product(file: &IdealFile, rep: &mut VerificationReport) -> Result<(), AlgebraError> {
    let f = file.generators.first().ok_or_else(|| AlgebraError::Internal("no f".into()))?;
    let n = f.ring().nvars();
    let t = Instant::now();
    let fam = knutson_closure(f, &file.order_or_default(), &[], &[], usize::MAX)?;
    rep.timings.push(("knutson".into(), t.elapsed()));
    // proper nonzero square-free monomial ideals: monotone Boolean functions minus the constants
    let expected = dedekind(n).map(|d| d - 2);
    let monomial = fam.members.iter().all(|m| m.ideal.generators().iter().all(Polynomial::is_monomial));
    rep.push(Check::expect(
        "knutson-all-squarefree-monomial",
        fam.is_sound() && monomial && Some(fam.members.len() as u64) == expected && !fam.budget_exhausted,
        format!("{} members, expected {expected:?}", fam.members.len()),
    ));
    Ok(())
}

fn dedekind(n: usize) -> Option<u64> {
    [2, 3, 6, 20, 168, 7581].get(n).copied()
}

/// `x1 < x2 > x3 < x4`: its order complex is the path `x1 - x2 - x3 - x4`.
pub fn fence_poset() -> Poset {
    Poset::new((1..=4).map(|i| format!("x{i}")).collect(), vec![1; 4], &[(0, 1), (2, 1), (2, 3)]).expect("valid fence")
}

/// `x_ij <= x_kl` iff `i <= k` and `j <= l`, elements in row-major order.
pub fn grid_poset(rows: usize, cols: usize) -> Poset {
    let names: Vec<String> = (1..=rows).flat_map(|i| (1..=cols).map(move |j| format!("x{i}{j}"))).collect();
    let mut rel = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let k = i * cols + j;
            if i + 1 < rows {
                rel.push((k, k + cols));
            }
            if j + 1 < cols {
                rel.push((k, k + 1));
            }
        }
    }
    Poset::new(names, vec![1; rows * cols], &rel).expect("valid grid")
}

fn asl(file: &IdealFile, rep: &mut VerificationReport, poset: &Poset) -> Result<(), AlgebraError> {
    expect_squarefree_report(rep);
    let ideal = file.ideal();
    let ring = ideal.ring();
    let init = ideal.initial_ideal(&file.order_or_default());
    let discrete = asl_discrete_monomial_ideal(poset, ring)?;
    rep.push(Check::expect("asl-discrete", init == discrete, format!("incomparable products: {discrete}")));
    let delta = poset.order_complex();
    rep.push(Check::expect("asl-order-complex", sr_ideal(&delta, ring)? == discrete, format!("order complex {delta}")));

    let inv = invariants(&ideal)?;
    let dim = inv.dim.unwrap_or(0);
    let h: Vec<i128> = hilbert_series(&ideal)?
        .h_polynomial()
        .map(|p| (0..=p.high_degree().unwrap_or(0)).map(|e| p.coeff(e)).collect())
        .unwrap_or_default();
    let fv = face_vectors(&delta);
    let h_delta: Vec<i128> = fv.h.iter().map(|&x| x as i128).collect::<Vec<_>>();
    let trimmed = |v: &[i128]| v.iter().rposition(|&x| x != 0).map_or(vec![], |k| v[..=k].to_vec());
    rep.push(Check::expect(
        "h-vector",
        inv.is_cohen_macaulay() && h == [1, 2] && trimmed(&h_delta) == h,
        format!("h = {h:?}, CM {}", inv.is_cohen_macaulay()),
    ));
    let hv: Option<Vec<u64>> = h.iter().map(|&x| u64::try_from(x).ok()).collect();
    let witness = hv.as_deref().and_then(is_f_vector);
    let bound = poset.len() - dim;
    let ok = witness.as_ref().is_some_and(|w| {
        let f = w.f_vector();
        Some(f.as_slice()) == hv.as_deref() && w.n_vertices() <= bound
    });
    rep.push(Check::expect(
        "egh-witness",
        ok,
        match &witness {
            Some(w) => format!("f-vector of {w} on at most {bound} vertices"),
            None => "no complex has this f-vector".into(),
        },
    ));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> SuiteOptions {
        SuiteOptions { threads: 2, ..SuiteOptions::default() }
    }

    #[test]
    fn binomial_edge_ideal_of_a_triangle() {
        let i = binomial_edge_ideal(3, &[(0, 1), (0, 2), (1, 2)], Field::Rationals).unwrap();
        assert_eq!(i.generators().len(), 3);
        assert!(i.initial_ideal(&TermOrder::Lex).is_squarefree());
        assert!(binomial_edge_ideal(3, &[(0, 3)], Field::Rationals).is_err());
    }

    #[test]
    fn corrupted_fixture_is_isolated() {
        let fx = vec![
            Fixture::from_text("good", TWISTED_CUBIC, None),
            Fixture::from_text("bad", "vars x1 x2\nx1^-1\n", None),
            Fixture::new("boom", || panic!("deliberate")),
        ];
        let reps = run_fixtures(fx, &quick());
        assert_eq!(reps.iter().map(|r| r.fixture.as_str()).collect::<Vec<_>>(), ["good", "bad", "boom"]);
        assert!(!reps[0].has_failure());
        assert_eq!(reps[1].check("parse").unwrap().verdict, Verdict::Fail);
        assert_eq!(reps[2].check("panic").unwrap().verdict, Verdict::Fail);
    }

    #[test]
    fn timeout_is_skipped() {
        let fx = vec![Fixture::new("slow", || {
            thread::sleep(Duration::from_millis(500));
            VerificationReport::empty("slow")
        })];
        let reps = run_fixtures(fx, &SuiteOptions { timeout: Duration::from_millis(20), ..quick() });
        assert_eq!(reps[0].check("timeout").unwrap().verdict, Verdict::Skipped);
    }

    #[test]
    fn asl_fixtures() {
        for (text, poset) in [(TWISTED_CUBIC, fence_poset()), (MINORS_2X3, grid_poset(2, 3))] {
            let rep = with_file("asl", text, None, |f, r| asl(f, r, &poset));
            assert!(!rep.has_failure(), "{:?}", rep.checks);
            assert_eq!(rep.check("egh-witness").unwrap().verdict, Verdict::Pass);
        }
    }
}
