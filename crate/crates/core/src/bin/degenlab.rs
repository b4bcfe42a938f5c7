//! Command-line front end. Exit codes: 0 pass, 1 FAIL verdict or failed
//! computation, 2 usage or input error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use degenlab::cohom::local_cohomology_table;
use degenlab::error::AlgebraError;
use degenlab::groebner::{generic_initial_ideal, GinOptions, Ideal, MonomialIdeal};
use degenlab::harness::{
    emit_report, exit_code, knutson_closure, parse_ideal_file, run_paper_suite, verify_file, IdealFile,
    ReportFormat, SuiteOptions, DEFAULT_KNUTSON_BUDGET, DEFAULT_SEED,
};
use degenlab::poly::{Field, TermOrder};
use degenlab::resolve::{betti_via_koszul, free_resolution, BettiTable};
use degenlab::simplicial::{face_vectors, sr_complex, sr_ideal, squarefree_dual_graph, SimplicialComplex};

#[derive(Parser)]
#[command(name = "degenlab", version, about = "Exact Gröbner degenerations and their homological invariants")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Term order: lex, degrevlex, or weight:w1,...,wn[/tiebreak]
    #[arg(long, global = true, value_parser = parse_order)]
    order: Option<TermOrder>,
    /// Coefficient field: Q or Fp (e.g. F7); overrides the file
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,
    /// Seed for randomized steps
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Gröbner basis
    Gb { file: PathBuf },
    /// Initial ideal and whether it is square-free
    Initial { file: PathBuf },
    /// Generic initial ideal by random coordinates
    Gin {
        file: PathBuf,
        /// Independent random changes of coordinates that must agree
        #[arg(long, default_value_t = 3)]
        trials: usize,
        /// Only generators up to this degree (homogeneous input, degree order)
        #[arg(long)]
        degree: Option<i64>,
    },
    /// Graded Betti table of S/I
    Betti {
        file: PathBuf,
        /// Cross-check against an independent method
        #[arg(long, value_parser = ["koszul"])]
        oracle: Option<String>,
        /// Internal degrees lo..hi for the oracle
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        window: Option<(i64, i64)>,
    },
    /// Graded local cohomology table h^ij(S/I)
    LcTable {
        file: PathBuf,
        /// Degrees lo..hi
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        range: Option<(i64, i64)>,
    },
    /// Compare S/I with S/in(I)
    VerifyDegen { file: PathBuf },
    /// Run the bundled regression corpus
    PaperSuite {
        /// Per-fixture wall-clock cap in minutes
        #[arg(long, default_value_t = 30)]
        timeout_min: u64,
        /// New members allowed in Knutson closures
        #[arg(long, default_value_t = DEFAULT_KNUTSON_BUDGET)]
        budget: usize,
        /// Worker threads (default: available parallelism)
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Closure of (f) and the file's seeds; f is the first generator
    Knutson {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_KNUTSON_BUDGET)]
        budget: usize,
    },
    /// Stanley–Reisner correspondence, either direction
    Sr {
        /// A square-free monomial ideal file
        #[arg(required_unless_present = "facets")]
        file: Option<PathBuf>,
        /// Facets as 1-based vertex lists, e.g. "1 2, 2 3"
        #[arg(long, conflicts_with = "file")]
        facets: Option<String>,
        /// Number of vertices for --facets (default: largest vertex)
        #[arg(long, requires = "facets")]
        vertices: Option<usize>,
    },
    /// Dual graph and Hirsch verdict of the radical of in(I)
    Hirsch { file: PathBuf },
}

fn parse_order(s: &str) -> Result<TermOrder, String> {
    TermOrder::parse(s).map_err(|e| match e {
        // a flag value has no file position
        AlgebraError::Parse { message, .. } => message,
        e => e.to_string(),
    })
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse::<Field>().map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected lo..hi, got `{s}`"))?;
    let lo = a.trim().parse::<i64>().map_err(|e| e.to_string())?;
    let hi = b.trim().parse::<i64>().map_err(|e| e.to_string())?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

/// Failure of a subcommand, mapped to an exit code.
enum Failure {
    Input(String),
    Compute(String),
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Parse { .. }
            | AlgebraError::UnknownField(_)
            | AlgebraError::InvalidModulus(_)
            | AlgebraError::InvalidRing(_)
            | AlgebraError::TooManyVariables(_) => Failure::Input(e.to_string()),
            other => Failure::Compute(other.to_string()),
        }
    }
}

struct Ctx {
    order: Option<TermOrder>,
    field: Option<Field>,
    seed: u64,
    json: bool,
}

impl Ctx {
    fn load(&self, path: &PathBuf) -> Result<(IdealFile, TermOrder), Failure> {
        let f = parse_ideal_file(path, self.field)?;
        let order = self.order.clone().unwrap_or_else(|| f.order_or_default());
        Ok((f, order))
    }

    fn print(&self, value: serde_json::Value, text: impl FnOnce() -> String) {
        if self.json {
            emit(&(serde_json::to_string_pretty(&value).expect("json") + "\n"));
        } else {
            emit(&text());
        }
    }
}

/// A closed pipe (`| head`) is not an error worth a panic.
fn emit(s: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

/// Monomial generators as a monomial ideal; input error otherwise.
fn as_monomial(ideal: &Ideal) -> Option<MonomialIdeal> {
    let gens = ideal.generators();
    gens.iter().all(|g| g.is_monomial()).then(|| {
        MonomialIdeal::new(ideal.ring(), gens.iter().map(|g| g.terms()[0].0).collect())
    })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let g = cli.global;
    let ctx = Ctx { order: g.order, field: g.field, seed: g.seed, json: g.json };
    match cli.cmd {
        Cmd::Gb { file } => {
            let (f, order) = ctx.load(&file)?;
            let gb = f.ideal().groebner_basis(&order);
            let els = strings(gb.elements());
            ctx.print(json!({"order": order.to_string(), "basis": els}), || els.iter().map(|e| format!("{e}\n")).collect());
        }
        Cmd::Initial { file } => {
            let (f, order) = ctx.load(&file)?;
            let init = f.ideal().initial_ideal(&order);
            ctx.print(
                json!({"order": order.to_string(), "initial": init.generator_strings(), "squarefree": init.is_squarefree()}),
                || format!("{init}\nsquare-free: {}\n", init.is_squarefree()),
            );
        }
        Cmd::Gin { file, trials, degree } => {
            let (f, order) = ctx.load(&file)?;
            let opts = GinOptions { seed: ctx.seed, trials, max_degree: degree };
            let gin = generic_initial_ideal(&f.ideal(), &order, &opts)?;
            ctx.print(
                json!({"order": order.to_string(), "seed": ctx.seed, "trials": trials, "max_degree": degree, "gin": gin.generator_strings()}),
                || format!("{gin}\n"),
            );
        }
        Cmd::Betti { file, oracle, window } => {
            let (f, _) = ctx.load(&file)?;
            let ideal = f.ideal();
            let table = BettiTable::from_resolution(&free_resolution(&ideal)?);
            let mut agree = None;
            if oracle.is_some() {
                let top = table.entries().map(|((_, j), _)| j).max().unwrap_or(0);
                let (lo, hi) = window.unwrap_or((0, top));
                let k = betti_via_koszul(&ideal, lo..=hi)?;
                agree = Some((lo, hi, k == table.restrict(lo, hi)));
            }
            ctx.print(
                json!({"betti": table, "oracle": agree.map(|(lo, hi, ok)| json!({"method": "koszul", "window": [lo, hi], "agree": ok}))}),
                || {
                    let mut s = format!("{table}\n");
                    if let Some((lo, hi, ok)) = agree {
                        s += &format!("koszul oracle on [{lo}, {hi}]: {}\n", if ok { "PASS" } else { "FAIL" });
                    }
                    s
                },
            );
            if agree.is_some_and(|(_, _, ok)| !ok) {
                return Ok(1);
            }
        }
        Cmd::LcTable { file, range } => {
            let (f, _) = ctx.load(&file)?;
            let t = local_cohomology_table(&f.ideal(), range)?;
            ctx.print(serde_json::to_value(&t).expect("json"), || {
                format!("{t}\ndepth {:?}, dim {:?}\n", t.depth(), t.dim())
            });
        }
        Cmd::VerifyDegen { file } => {
            let (f, order) = ctx.load(&file)?;
            let rep = verify_file(&file.display().to_string(), &f, &order);
            let reps = [rep];
            emit(&emit_report(&reps, if ctx.json { ReportFormat::Json } else { ReportFormat::Text }));
            return Ok(exit_code(&reps) as u8);
        }
        Cmd::PaperSuite { timeout_min, budget, threads } => {
            if ctx.order.is_some() {
                return Err(Failure::Input("paper-suite fixtures carry their own orders; --order is not accepted".into()));
            }
            let mut opts = SuiteOptions {
                field: ctx.field,
                seed: ctx.seed,
                timeout: Duration::from_secs(timeout_min.saturating_mul(60)),
                knutson_budget: budget,
                ..SuiteOptions::default()
            };
            if let Some(t) = threads {
                opts.threads = t.max(1);
            }
            let reps = run_paper_suite(&opts);
            emit(&emit_report(&reps, if ctx.json { ReportFormat::Json } else { ReportFormat::Text }));
            return Ok(exit_code(&reps) as u8);
        }
        Cmd::Knutson { file, budget } => {
            let (f, order) = ctx.load(&file)?;
            let p = f.generators.first().ok_or_else(|| Failure::Input("no generator to use as f".into()))?;
            let fam = knutson_closure(p, &order, &f.seed_ideals(), &f.colon_ideals(), budget)?;
            ctx.print(serde_json::to_value(&fam).expect("json"), || fam.to_string());
            return Ok(u8::from(!fam.is_sound()));
        }
        Cmd::Sr { file, facets, vertices } => match (file, facets) {
            (Some(file), _) => {
                let (f, _) = ctx.load(&file)?;
                let m = as_monomial(&f.ideal()).ok_or_else(|| Failure::Input("sr needs monomial generators".into()))?;
                let delta = sr_complex(&m)?;
                let fv = face_vectors(&delta);
                let names = f.ring.names();
                let facets: Vec<Vec<String>> =
                    delta.facets().iter().map(|fc| fc.iter().map(|&v| names[v].clone()).collect()).collect();
                ctx.print(json!({"facets": facets, "dim": delta.dim(), "f": fv.f, "h": fv.h}), || {
                    let fs: Vec<String> = facets.iter().map(|fc| format!("{{{}}}", fc.join(","))).collect();
                    format!("facets: {}\ndim {:?}\nf = {:?}\nh = {:?}\n", fs.join(" "), delta.dim(), fv.f, fv.h)
                });
            }
            (None, Some(spec)) => {
                let lists: Vec<Vec<usize>> = spec
                    .split(',')
                    .map(|part| {
                        part.split_whitespace()
                            .map(|v| v.parse::<usize>().ok().filter(|&v| v >= 1).map(|v| v - 1))
                            .collect::<Option<Vec<usize>>>()
                    })
                    .collect::<Option<_>>()
                    .ok_or_else(|| Failure::Input(format!("bad facet list `{spec}`")))?;
                let top = lists.iter().flatten().map(|&v| v + 1).max().unwrap_or(0);
                let n = vertices.unwrap_or(top);
                if n < top {
                    return Err(Failure::Input(format!("vertex {top} exceeds --vertices {n}")));
                }
                let delta = SimplicialComplex::new(n, &lists)?;
                let ring = degenlab::poly::PolyRing::standard(n, ctx.field.unwrap_or(Field::Rationals));
                let m = sr_ideal(&delta, &ring)?;
                let fv = face_vectors(&delta);
                ctx.print(json!({"ideal": m.generator_strings(), "f": fv.f, "h": fv.h}), || {
                    format!("{m}\nf = {:?}\nh = {:?}\n", fv.f, fv.h)
                });
            }
            (None, None) => return Err(Failure::Input("give a file or --facets".into())),
        },
        Cmd::Hirsch { file } => {
            let (f, order) = ctx.load(&file)?;
            let ideal = f.ideal();
            // same minimal primes as in(I), hence the same dual graph
            let m = as_monomial(&ideal).unwrap_or_else(|| ideal.initial_ideal(&order)).radical();
            let g = squarefree_dual_graph(&m)?;
            let primes = degenlab::simplicial::minimal_primes_squarefree(&m)?;
            let names = f.ring.names();
            let label = |p: &Vec<usize>| format!("({})", p.iter().map(|&v| names[v].as_str()).collect::<Vec<_>>().join(","));
            let labels: Vec<String> = primes.iter().map(label).collect();
            let edges: Vec<[String; 2]> = g.edges.iter().map(|&(a, b)| [labels[a].clone(), labels[b].clone()]).collect();
            ctx.print(
                json!({"ideal": m.generator_strings(), "primes": labels, "edges": edges, "height": g.height,
                       "diameter": g.diameter(), "hirsch": g.is_hirsch()}),
                || {
                    let mut s = format!("ideal {m}\nminimal primes:\n");
                    for (k, l) in labels.iter().enumerate() {
                        s += &format!("  P{} = {l}\n", k + 1);
                    }
                    let es: Vec<String> = g.edges.iter().map(|&(a, b)| format!("P{}P{}", a + 1, b + 1)).collect();
                    s += &format!("edges: {}\nheight {}, diameter {:?}\nHirsch: {}\n", es.join(" "), g.height, g.diameter(), g.is_hirsch());
                    s
                },
            );
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
