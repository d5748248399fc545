//! The `hyperchoose` command line: file I/O, JSON reports and exit codes.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 2 | unreadable or malformed input, bad arguments |
//! | 3 | a search guard was exceeded |
//! | 4 | a method precondition failed |
//! | 5 | `color --method exact` found no coloring |
//!
//! Every JSON report carries `schema_version`. Reports are byte-stable for a
//! fixed invocation and seed once timing is disabled with `--no-timing`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::choosability::{self, Guard, CHROMATIC_VERTEX_GUARD};
use crate::degree_constrained::{build_selection, list_color_gk};
use crate::dense;
use crate::density::{self, bound_degree, bound_gk, bound_sparse, gk_degree_cap, Rational};
use crate::error::Error;
use crate::generators::{gen_complete, gen_fano, gen_k_regular_k_uniform};
use crate::hypergraph::{is_proper, Coloring, Hypergraph, ListAssignment, Metrics, Orientation};
use crate::nullstellensatz::{coefficient_count, MonomialTarget};
use crate::orientation::{hall_orientation, list_color_sparse_with, min_orientation, PairSolver};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;
pub const EXIT_NO_COLORING: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "hyperchoose",
    version,
    about = "List coloring and choosability of hypergraphs"
)]
pub struct Cli {
    /// Leave the elapsed_ms field out of reports.
    #[arg(long, global = true)]
    pub no_timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Metrics, density, 2-colorability and choosability bounds.
    Analyze(AnalyzeArgs),
    /// Orientation with the least possible maximum in-degree.
    Orient(OrientArgs),
    /// Color a hypergraph from a list file.
    Color(ColorArgs),
    /// Decide f-choosability by enumerating list systems.
    Choosability(ChoosabilityArgs),
    /// Exact choice number or chromatic number.
    Exact(ExactArgs),
    /// Polynomial coefficient certificate for the minimum orientation.
    Coefficient(InputArgs),
    /// Palette splitting and random-list experiments.
    #[command(subcommand)]
    Dense(DenseCommand),
    /// Write a generated hypergraph in HGR format.
    #[command(subcommand)]
    Generate(GenerateCommand),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Hypergraph in HGR format.
    pub path: PathBuf,
}

#[derive(Debug, Args)]
pub struct GuardArgs {
    /// Vertex limit for list-system enumeration.
    #[arg(long, default_value_t = Guard::default().max_vertices)]
    pub max_vertices: usize,
    /// Limit on the sum of list sizes during enumeration.
    #[arg(long, default_value_t = Guard::default().max_colors)]
    pub max_colors: usize,
}

impl GuardArgs {
    fn guard(&self) -> Guard {
        Guard {
            max_vertices: self.max_vertices,
            max_colors: self.max_colors,
        }
    }
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub path: PathBuf,
    /// Exact density by enumeration, plus exact chromatic and choice numbers.
    #[arg(long, conflicts_with = "flow")]
    pub exact: bool,
    /// Density by parametric max-flow regardless of size.
    #[arg(long)]
    pub flow: bool,
    #[command(flatten)]
    pub guard: GuardArgs,
}

#[derive(Debug, Args)]
pub struct OrientArgs {
    pub path: PathBuf,
    /// Require in-degree at most K instead of minimizing.
    #[arg(long)]
    pub k: Option<usize>,
    /// Also write the bare head array to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Sparse,
    Gk,
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Solver {
    Backtracking,
    Kernels,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    pub path: PathBuf,
    /// List assignment in JSON.
    #[arg(long)]
    pub lists: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Sparse)]
    pub method: Method,
    /// Pair-graph solver for the sparse method.
    #[arg(long, value_enum, default_value_t = Solver::Backtracking)]
    pub solver: Solver,
    /// Also write the bare coloring array to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ChoosabilityArgs {
    pub path: PathBuf,
    /// List size: one value for every vertex, or one per vertex separated by commas.
    #[arg(long = "f", value_delimiter = ',', required = true)]
    pub f: Vec<usize>,
    #[command(flatten)]
    pub guard: GuardArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Ch,
    Chi,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    pub path: PathBuf,
    #[arg(long, value_enum)]
    pub what: Quantity,
    #[command(flatten)]
    pub guard: GuardArgs,
}

#[derive(Debug, Args)]
pub struct SeedArgs {
    #[arg(long, env = "HYPERCHOOSE_SEED", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum DenseCommand {
    /// Threshold predicates and split probability for (s, l, t).
    Thresholds {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        t: u64,
    },
    /// Palette-splitting colorer on a 2-colorable uniform hypergraph.
    SplitColor {
        path: PathBuf,
        #[arg(long)]
        lists: PathBuf,
        /// Split draws allowed for one coloring attempt.
        #[arg(long, default_value_t = 1000)]
        max_iters: u64,
        /// Run this many independent single-split trials instead.
        #[arg(long)]
        trials: Option<u64>,
        #[command(flatten)]
        seed: SeedArgs,
    },
    /// Mirrored random lists on the complete 2-colorable hypergraph.
    LowerBound {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        l: usize,
        /// Number of vertices (even).
        #[arg(long, required_unless_present = "sweep")]
        t: Option<usize>,
        /// Comma separated t values; prints CSV instead of JSON.
        #[arg(long, value_delimiter = ',', conflicts_with = "t")]
        sweep: Vec<usize>,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[command(flatten)]
        seed: SeedArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenerateCommand {
    /// All s-sets meeting both parts of sizes n and m.
    Complete {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// The Fano plane.
    Fano,
    /// A k-uniform k-regular hypergraph on n vertices.
    Regular {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        seed: SeedArgs,
    },
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GuardExceeded(_) => EXIT_GUARD,
            Error::Precondition(_) => EXIT_PRECONDITION,
            Error::Parse { .. } | Error::Invalid(_) | Error::Io(_) | Error::Json(_) => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `args` (program name first) and runs the command, writing
/// reports to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

struct Context<'a> {
    out: &'a mut dyn Write,
    timing: bool,
    started: Instant,
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    command: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    input_sha256: Option<String>,
    #[serde(flatten)]
    body: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

impl Context<'_> {
    fn report<T: Serialize>(&mut self, command: &str, digest: Option<String>, body: T) -> Outcome {
        let env = Envelope {
            schema_version: SCHEMA_VERSION,
            command,
            input_sha256: digest,
            body,
            elapsed_ms: self
                .timing
                .then(|| self.started.elapsed().as_secs_f64() * 1000.0),
        };
        let text = serde_json::to_string_pretty(&env).map_err(Error::from)?;
        writeln!(self.out, "{text}").map_err(Error::from)?;
        Ok(())
    }

    fn raw(&mut self, text: &str) -> Outcome {
        self.out.write_all(text.as_bytes()).map_err(Error::from)?;
        Ok(())
    }
}

struct Input {
    h: Hypergraph,
    digest: String,
}

fn read_bytes(path: &Path) -> std::result::Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn load_hypergraph(path: &Path) -> std::result::Result<Input, Failure> {
    let bytes = read_bytes(path)?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Failure {
        code: EXIT_INPUT,
        message: format!("{}: not UTF-8", path.display()),
    })?;
    let h = Hypergraph::parse(&text).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })?;
    Ok(Input {
        h,
        digest: digest(&bytes),
    })
}

fn load_lists(path: &Path, n: usize) -> std::result::Result<ListAssignment, Failure> {
    let bytes = read_bytes(path)?;
    let text = String::from_utf8_lossy(&bytes);
    let lists = ListAssignment::from_json(&text).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })?;
    if lists.len() != n {
        return Err(Failure {
            code: EXIT_INPUT,
            message: format!("{}: {} lists for {n} vertices", path.display(), lists.len()),
        });
    }
    Ok(lists)
}

fn write_json_file<T: Serialize>(path: &Path, value: &T) -> Outcome {
    let text = serde_json::to_string(value).map_err(Error::from)?;
    fs::write(path, text + "\n").map_err(Error::from)?;
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let mut ctx = Context {
        out,
        timing: !cli.no_timing,
        started: Instant::now(),
    };
    match &cli.command {
        Command::Analyze(a) => analyze(&mut ctx, a),
        Command::Orient(a) => orient(&mut ctx, a),
        Command::Color(a) => color(&mut ctx, a),
        Command::Choosability(a) => choosability(&mut ctx, a),
        Command::Exact(a) => exact(&mut ctx, a),
        Command::Coefficient(a) => coefficient(&mut ctx, a),
        Command::Dense(d) => dense_command(&mut ctx, d),
        Command::Generate(g) => generate(&mut ctx, g),
    }
}

#[derive(Serialize)]
struct Bounds {
    #[serde(skip_serializing_if = "Option::is_none")]
    sparse: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    degree: Option<u64>,
    gk: u64,
}

#[derive(Serialize)]
struct AnalysisReport {
    n: usize,
    metrics: Metrics,
    duplicate_edges: usize,
    two_colorable: bool,
    l_num: u64,
    l_den: u64,
    density_method: &'static str,
    bounds: Bounds,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ch: Option<usize>,
}

fn analyze(ctx: &mut Context, a: &AnalyzeArgs) -> Outcome {
    let Input { h, digest } = load_hypergraph(&a.path)?;
    let metrics = h.metrics()?;
    let (l, method): (Rational, _) = if a.exact {
        (density::density_exact(&h)?, "exact")
    } else if a.flow {
        (density::density_flow(&h)?, "flow")
    } else if h.edge_count() <= density::EXACT_EDGE_GUARD {
        (density::density(&h)?, "exact")
    } else {
        (density::density(&h)?, "flow")
    };
    let valid = |b: density::Bound| b.valid.then_some(b.value);
    let bounds = Bounds {
        sparse: valid(bound_sparse(&h)?),
        degree: valid(bound_degree(&h)?),
        gk: bound_gk(&h)?.value,
    };
    let (chi, ch) = if a.exact {
        (
            Some(choosability::chromatic_number(&h)?),
            Some(choosability::choice_number_with(&h, a.guard.guard())?),
        )
    } else {
        (None, None)
    };
    let report = AnalysisReport {
        n: h.n(),
        metrics,
        duplicate_edges: h.validate().len(),
        two_colorable: h.find_bipartition().is_some(),
        l_num: l.num(),
        l_den: l.den(),
        density_method: method,
        bounds,
        chi,
        ch,
    };
    ctx.report("analyze", Some(digest), report)
}

#[derive(Serialize)]
struct OrientReport<'a> {
    k: usize,
    orientation: &'a Orientation,
    in_degrees: Vec<usize>,
}

fn orient(ctx: &mut Context, a: &OrientArgs) -> Outcome {
    let Input { h, digest } = load_hypergraph(&a.path)?;
    let (k, phi) = match a.k {
        Some(k) => {
            let phi = hall_orientation(&h, k).ok_or_else(|| {
                Error::Precondition(format!("no orientation with in-degree at most {k}"))
            })?;
            (k, phi)
        }
        None => min_orientation(&h)?,
    };
    if let Some(path) = &a.out {
        write_json_file(path, &phi)?;
    }
    let report = OrientReport {
        k,
        in_degrees: phi.degrees(h.n()),
        orientation: &phi,
    };
    ctx.report("orient", Some(digest), report)
}

#[derive(Serialize)]
struct ColorReport<'a> {
    method: &'static str,
    coloring: &'a Coloring,
    colors_used: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    selection: Option<Vec<[usize; 2]>>,
}

fn color(ctx: &mut Context, a: &ColorArgs) -> Outcome {
    let Input { h, digest } = load_hypergraph(&a.path)?;
    let lists = load_lists(&a.lists, h.n())?;
    let mut selection = None;
    let (method, coloring) = match a.method {
        Method::Sparse => {
            let bip = h
                .find_bipartition()
                .ok_or_else(|| Error::Precondition("hypergraph is not 2-colorable".into()))?;
            let solver = match a.solver {
                Solver::Backtracking => PairSolver::Backtracking,
                Solver::Kernels => PairSolver::Kernels,
            };
            ("sparse", list_color_sparse_with(&h, &bip, &lists, solver)?)
        }
        Method::Gk => {
            let c = list_color_gk(&h, &lists)?;
            if h.edge_count() > 0 {
                selection = build_selection(&h, gk_degree_cap(&h)?).map(|s| s.chosen);
            }
            ("gk", c)
        }
        Method::Exact => match choosability::color_from_lists(&h, &lists) {
            Some(c) => ("exact", c),
            None => {
                return Err(Failure {
                    code: EXIT_NO_COLORING,
                    message: "no proper coloring from these lists".into(),
                })
            }
        },
    };
    assert!(
        is_proper(&h, &coloring) && coloring.respects(&lists),
        "refusing to write an improper coloring"
    );
    if let Some(path) = &a.out {
        write_json_file(path, &coloring)?;
    }
    let report = ColorReport {
        method,
        colors_used: coloring.color_count(),
        coloring: &coloring,
        selection,
    };
    ctx.report("color", Some(digest), report)
}

#[derive(Serialize)]
struct ChoosabilityReport {
    f: Vec<usize>,
    #[serde(flatten)]
    verdict: choosability::ChoosabilityVerdict,
}

fn choosability(ctx: &mut Context, a: &ChoosabilityArgs) -> Outcome {
    let Input { h, digest } = load_hypergraph(&a.path)?;
    let f = match a.f.as_slice() {
        [k] => vec![*k; h.n()],
        many if many.len() == h.n() => many.to_vec(),
        many => {
            return Err(Error::Invalid(format!(
                "--f has {} values for {} vertices",
                many.len(),
                h.n()
            ))
            .into())
        }
    };
    let verdict = choosability::is_f_choosable_with(&h, &f, a.guard.guard())?;
    ctx.report(
        "choosability",
        Some(digest),
        ChoosabilityReport { f, verdict },
    )
}

#[derive(Serialize)]
struct ExactReport {
    what: &'static str,
    value: usize,
}

fn exact(ctx: &mut Context, a: &ExactArgs) -> Outcome {
    let Input { h, digest } = load_hypergraph(&a.path)?;
    let report = match a.what {
        Quantity::Chi => {
            if h.n() > CHROMATIC_VERTEX_GUARD {
                return Err(Error::GuardExceeded(format!(
                    "chromatic number limited to {CHROMATIC_VERTEX_GUARD} vertices"
                ))
                .into());
            }
            ExactReport {
                what: "chi",
                value: choosability::chromatic_number(&h)?,
            }
        }
        Quantity::Ch => ExactReport {
            what: "ch",
            value: choosability::choice_number_with(&h, a.guard.guard())?,
        },
    };
    ctx.report("exact", Some(digest), report)
}

#[derive(Serialize)]
struct CoefficientReport<'a> {
    orientation: &'a Orientation,
    /// Decimal string; coefficients outgrow 64 bits.
    coef: String,
    sign: i8,
    choosable_bound: usize,
}

fn coefficient(ctx: &mut Context, a: &InputArgs) -> Outcome {
    let Input { h, digest } = load_hypergraph(&a.path)?;
    let bip = h
        .find_bipartition()
        .ok_or_else(|| Error::Precondition("hypergraph is not 2-colorable".into()))?;
    let (k, phi) = min_orientation(&h)?;
    let coef = coefficient_count(&h, &bip, &phi)?;
    let sign = MonomialTarget::from_orientation(&h, &phi).sign(&bip);
    let report = CoefficientReport {
        orientation: &phi,
        coef: coef.to_string(),
        sign,
        choosable_bound: k + 1,
    };
    ctx.report("coefficient", Some(digest), report)
}

#[derive(Serialize)]
struct ThresholdReport {
    s: u64,
    l: u32,
    t: u64,
    split_probability: f64,
    ert_upper: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    corollary: Option<bool>,
    heuristic_margin: f64,
}

fn dense_command(ctx: &mut Context, d: &DenseCommand) -> Outcome {
    match d {
        DenseCommand::Thresholds { s, l, t } => {
            let report = ThresholdReport {
                s: *s,
                l: *l,
                t: *t,
                split_probability: dense::split_probability(*s, *l),
                ert_upper: dense::cond_ert_upper(*s, *l, *t)?,
                corollary: if *l >= 2 {
                    Some(dense::cond_corollary(*s, *l, *t)?)
                } else {
                    None
                },
                heuristic_margin: dense::asymptotic_margin_heuristic(*s, *l, *t),
            };
            ctx.report("dense thresholds", None, report)
        }
        DenseCommand::SplitColor {
            path,
            lists,
            max_iters,
            trials,
            seed,
        } => {
            let Input { h, digest } = load_hypergraph(path)?;
            let lists = load_lists(lists, h.n())?;
            let bip = h
                .find_bipartition()
                .ok_or_else(|| Error::Precondition("hypergraph is not 2-colorable".into()))?;
            match trials {
                Some(trials) => {
                    let rep = dense::split_color_experiment(&h, &bip, &lists, *trials, seed.seed)?;
                    ctx.report("dense split-color", Some(digest), rep)
                }
                None => {
                    let rep = dense::random_split_color(&h, &bip, &lists, *max_iters, seed.seed)?;
                    ctx.report("dense split-color", Some(digest), rep)
                }
            }
        }
        DenseCommand::LowerBound {
            s,
            l,
            t,
            sweep,
            trials,
            seed,
        } => {
            if let Some(t) = t {
                let rep = dense::lower_bound_experiment(*s, *l, *t, *trials, seed.seed)?;
                return ctx.report("dense lower-bound", None, rep);
            }
            let rows = dense::lower_bound_sweep(*s, *l, sweep.iter().copied(), *trials, seed.seed)?;
            let mut buf = Vec::new();
            dense::write_sweep_csv(&rows, &mut buf)?;
            ctx.raw(&String::from_utf8_lossy(&buf))
        }
    }
}

fn generate(ctx: &mut Context, g: &GenerateCommand) -> Outcome {
    let h = match g {
        GenerateCommand::Complete { s, n, m } => gen_complete(*s, *n, *m)?.0,
        GenerateCommand::Fano => gen_fano(),
        GenerateCommand::Regular { k, n, seed } => gen_k_regular_k_uniform(*k, *n, seed.seed)?
            .ok_or_else(|| Error::GuardExceeded("search budget exhausted".into()))?,
    };
    ctx.raw(&h.to_hgr())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("hyperchoose").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn thresholds_report() {
        let (code, out, _) = call(&[
            "--no-timing",
            "dense",
            "thresholds",
            "--s",
            "16",
            "--l",
            "2",
            "--t",
            "6",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["ert_upper"], true);
        assert_eq!(v["corollary"], false);
        assert!(v.get("elapsed_ms").is_none());
    }

    #[test]
    fn generate_fano_is_hgr() {
        let (code, out, _) = call(&["generate", "fano"]);
        assert_eq!(code, 0);
        assert_eq!(Hypergraph::parse(&out).unwrap(), gen_fano());
    }

    #[test]
    fn bad_arguments_exit_two() {
        assert_eq!(call(&["frobnicate"]).0, EXIT_INPUT);
        assert_eq!(call(&["analyze", "/nonexistent/file.hgr"]).0, EXIT_INPUT);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn guard_exits_three() {
        let (code, _, err) = call(&[
            "dense",
            "lower-bound",
            "--s",
            "2",
            "--l",
            "4",
            "--t",
            "6",
            "--trials",
            "1",
        ]);
        assert_eq!(code, EXIT_GUARD, "{err}");
    }
}
