//! The `rigidkit` command line.
//!
//! Exit status: 0 yes (minimally rigid, tight, certificate valid), 1 no,
//! 2 input error, 3 theorem violation (routes that must agree did not).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use rigidkit_core::canon::canonical_hash_bounded;
use rigidkit_core::construct::{block_and_hole, discus_and_hole, looped_2sigma, looped_3sigma_minus, BlockSpec};
use rigidkit_core::facegraph::{
    enumerate_critical_separating_cycles_with, reduce_to_k3, replay, verify_certificate, CriticalityOracle,
    CycleSearch, FaceGraph, DEFAULT_CYCLE_CAP,
};
use rigidkit_core::numeric::{euclidean_rigidity_rank_from, RankVerdict, DEFAULT_SEEDS};
use rigidkit_core::oracle::{
    check_30_bounded, check_36_bounded, generate_corpus, CarveStrategy, CorpusConfig, SparsityReport, CHECK_30_BOUND,
    CHECK_36_BOUND,
};
use rigidkit_core::origami::{origami_to_block_and_hole, BlockStyle};
use rigidkit_core::pebble::{pebble_game, verify_orientation, OutdegreeBound, PebbleVerdict};
use rigidkit_core::{Multigraph, SimpleGraph};
use serde_json::{json, Value};

use crate::formats::{self, FormatError, Looped, OrientationCertificate};
use crate::lp::{lp_independence_report, LpError, DEFAULT_TOLERANCE, DEFAULT_TRIALS};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(rigidkit_core::Error),
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error("{0}")]
    Usage(String),
    #[error("theorem violation: {0}")]
    Violation(String),
}

impl From<rigidkit_core::Error> for CliError {
    fn from(e: rigidkit_core::Error) -> Self {
        match e {
            rigidkit_core::Error::TheoremViolation(msg) => CliError::Violation(msg),
            e => CliError::Core(e),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Violation(_) => EXIT_VIOLATION,
            _ => EXIT_INPUT,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "rigidkit", version, about = "Minimal 3-rigidity of block-and-hole graphs")]
pub struct Cli {
    /// Emit one JSON object per input instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for archives. Output order does not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Vertex bound for subset enumeration, cycle search and canonical hashing.
    #[arg(long, global = true, env = "RIGIDKIT_MAX_VERTICES")]
    pub max_vertices: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide minimal 3-rigidity of the block-and-hole graph of a face graph.
    Check(CheckArgs),
    /// Reduce a face graph to K3 and optionally replay the splits.
    Reduce(ReduceArgs),
    /// List critical separating cycles.
    Csc(CscArgs),
    /// Convert a polyhedral surface with rigid panels and check it.
    Origami(OrigamiArgs),
    /// Write a seeded corpus archive.
    Gen(GenArgs),
    /// Re-check a certificate against its input.
    Verify(VerifyArgs),
    /// Brute-force sparsity check.
    Oracle(OracleArgs),
    /// Exact generic rank in 3-space.
    Numeric(NumericArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Pebble2,
    Pebble3,
    Brute,
    Numeric,
    All,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t = RouteArg::All)]
    pub route: RouteArg,
    /// Orientation certificate path. Archive entries get `.<index>` appended.
    #[arg(long)]
    pub cert: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub cert: Option<PathBuf>,
    #[arg(long)]
    pub replay: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleArg {
    Pebble,
    Brute,
}

#[derive(Debug, Args)]
pub struct CscArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub nonfacial: bool,
    #[arg(long, value_enum, default_value_t = OracleArg::Pebble)]
    pub oracle: OracleArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BlockArg {
    Apex,
    Prism,
    Discus,
}

#[derive(Debug, Args)]
pub struct OrigamiArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t = BlockArg::Apex)]
    pub block: BlockArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Mixed,
    Random,
    Balanced,
    BalancedQuads,
    MaximalQuads,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub vertices: usize,
    #[arg(long, default_value_t = 0)]
    pub holes: usize,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long)]
    pub min_vertices: Option<usize>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Mixed)]
    pub strategy: StrategyArg,
    /// Give every graph a B face, holes or not.
    #[arg(long)]
    pub single_block: bool,
    /// Archive path; without it the archive goes to standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("certificate").required(true).args(["reduction", "orientation"])))]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub reduction: Option<PathBuf>,
    #[arg(long)]
    pub orientation: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SparsityArg {
    #[value(name = "36")]
    ThreeSix,
    #[value(name = "30")]
    ThreeZero,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t = SparsityArg::ThreeSix)]
    pub sparsity: SparsityArg,
}

#[derive(Debug, Args)]
pub struct NumericArgs {
    pub file: PathBuf,
    #[arg(long, default_value_t = DEFAULT_SEEDS)]
    pub seeds: usize,
    /// Also run the floating point independence check in l_p space.
    #[arg(long)]
    pub experimental_lp_rigidity: bool,
    #[arg(long, default_value_t = 4.0)]
    pub p: f64,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
}

/// Report for one input or archive entry.
#[derive(Debug, Clone)]
pub struct Report {
    pub status: i32,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn failed(err: &CliError) -> Self {
        Report { status: err.exit_code(), text: format!("error {err}\n"), json: json!({ "error": err.to_string() }) }
    }
}

struct Settings {
    seed: u64,
    bound36: usize,
    bound30: usize,
    cycle_bound: usize,
}

impl Settings {
    fn from_cli(cli: &Cli) -> Self {
        let max = cli.max_vertices;
        Settings {
            seed: cli.seed,
            bound36: max.unwrap_or(CHECK_36_BOUND),
            bound30: max.unwrap_or(CHECK_30_BOUND),
            cycle_bound: max.unwrap_or(rigidkit_core::facegraph::DEFAULT_CYCLE_VERTEX_BOUND),
        }
    }
}

/// Parses arguments, runs the command and prints to standard output.
/// Returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_YES };
        }
    };
    match execute(&cli) {
        Ok(reports) => {
            let mut out = String::new();
            for r in &reports {
                if cli.json {
                    out.push_str(&r.json.to_string());
                    out.push('\n');
                } else {
                    out.push_str(&r.text);
                }
            }
            print!("{out}");
            combine(reports.iter().map(|r| r.status))
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.to_string() }));
            }
            eprintln!("rigidkit: {e}");
            e.exit_code()
        }
    }
}

/// Worst status wins: violation, then input error, then no.
fn combine(statuses: impl Iterator<Item = i32>) -> i32 {
    statuses
        .max_by_key(|&s| match s {
            EXIT_VIOLATION => 3,
            EXIT_INPUT => 2,
            EXIT_NO => 1,
            _ => 0,
        })
        .unwrap_or(EXIT_YES)
}

pub fn execute(cli: &Cli) -> CliResult<Vec<Report>> {
    if cli.jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let settings = Settings::from_cli(cli);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker threads: {e}")))?;
    pool.install(|| match &cli.command {
        Command::Check(a) => per_entry(&a.file, |i, many, g| check_entry(&settings, a, i, many, g)),
        Command::Reduce(a) => per_entry(&a.file, |i, many, g| reduce_entry(&settings, a, i, many, g)),
        Command::Csc(a) => per_entry(&a.file, |_, _, g| csc_entry(&settings, a, g)),
        Command::Origami(a) => origami(&settings, a).map(|r| vec![r]),
        Command::Gen(a) => gen(cli.seed, a).map(|r| vec![r]),
        Command::Verify(a) => per_entry(&a.input, |i, many, g| verify_entry(a, i, many, g)),
        Command::Oracle(a) => graph_input(&a.file, |g| oracle(&settings, a, g)),
        Command::Numeric(a) => graph_input(&a.file, |g| numeric(&settings, a, g)),
    })
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

/// Certificate path of archive entry `i`.
fn entry_path(path: &Path, index: usize, many: bool) -> PathBuf {
    if many {
        let mut s = path.as_os_str().to_owned();
        s.push(format!(".{index}"));
        PathBuf::from(s)
    } else {
        path.to_owned()
    }
}

/// Runs `f` on every face graph of a file, in parallel, keeping file order.
/// Errors inside one entry become that entry's report.
fn per_entry<F>(path: &Path, f: F) -> CliResult<Vec<Report>>
where
    F: Fn(usize, bool, &FaceGraph) -> CliResult<Report> + Sync,
{
    let graphs = formats::parse_facegraphs(&read(path)?)?;
    let many = graphs.len() > 1;
    Ok(graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let mut r = f(i, many, g).unwrap_or_else(|e| Report::failed(&e));
            if many {
                r.text = format!("entry {i}\n{}", r.text);
                if let Value::Object(map) = &mut r.json {
                    map.insert("entry".into(), json!(i));
                }
            }
            r
        })
        .collect())
}

/// Input to `oracle` and `numeric`: a multigraph file or a face graph file.
enum GraphInput {
    Multigraph(Multigraph),
    FaceGraph(FaceGraph),
}

fn graph_input<F>(path: &Path, f: F) -> CliResult<Vec<Report>>
where
    F: Fn(&GraphInput) -> CliResult<Report> + Sync,
{
    let text = read(path)?;
    if formats::detect_kind(&text) == Some("multigraph") {
        return Ok(vec![f(&GraphInput::Multigraph(formats::parse_multigraph(&text)?))?]);
    }
    let graphs = formats::parse_facegraphs(&text)?;
    let many = graphs.len() > 1;
    Ok(graphs
        .into_par_iter()
        .enumerate()
        .map(|(i, g)| {
            let mut r = f(&GraphInput::FaceGraph(g)).unwrap_or_else(|e| Report::failed(&e));
            if many {
                r.text = format!("entry {i}\n{}", r.text);
            }
            r
        })
        .collect())
}

/// `Ĝ`: a discus on every B face. For one block this is `G†`.
fn realized(g: &FaceGraph) -> CliResult<SimpleGraph> {
    if g.block_count() <= 1 {
        return Ok(discus_and_hole(g));
    }
    Ok(block_and_hole(g, vec![BlockSpec::Discus; g.block_count()])?.realized)
}

fn sparsity_json(r: &SparsityReport) -> Value {
    json!({ "tight": r.tight, "sparse": r.sparse, "witness": r.witness, "witness_freedom": r.witness_freedom })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Route {
    Pebble2,
    Pebble3,
    Brute,
    Numeric,
}

impl Route {
    fn name(self) -> &'static str {
        match self {
            Route::Pebble2 => "pebble-2sigma",
            Route::Pebble3 => "pebble-3sigma",
            Route::Brute => "brute-36",
            Route::Numeric => "numeric",
        }
    }
}

struct RouteOutcome {
    route: Route,
    tight: bool,
    orientation: Option<(Looped, rigidkit_core::pebble::Orientation)>,
}

fn run_route(s: &Settings, route: Route, g: &FaceGraph) -> CliResult<RouteOutcome> {
    let pebble = |looped: Looped, m: Multigraph| -> CliResult<RouteOutcome> {
        let verdict = pebble_game(&m, 3, 0)?;
        let tight = verdict.is_tight();
        let orientation = match verdict {
            PebbleVerdict::Tight(o) => Some((looped, o)),
            _ => None,
        };
        Ok(RouteOutcome { route, tight, orientation })
    };
    match route {
        Route::Pebble2 => pebble(Looped::TwoSigma, looped_2sigma(g)?),
        Route::Pebble3 => pebble(Looped::ThreeSigma, looped_3sigma_minus(g)?),
        Route::Brute => {
            let tight = check_36_bounded(&realized(g)?, s.bound36)?.tight;
            Ok(RouteOutcome { route, tight, orientation: None })
        }
        Route::Numeric => {
            let report = euclidean_rigidity_rank_from(&realized(g)?, DEFAULT_SEEDS, s.seed)?;
            Ok(RouteOutcome { route, tight: report.verdict == RankVerdict::MinimallyRigid, orientation: None })
        }
    }
}

/// Whether the characterisation covers `g`: one block, or one hole.
fn characterised(g: &FaceGraph) -> bool {
    g.block_count() <= 1 || g.hole_count() <= 1
}

fn check_entry(s: &Settings, a: &CheckArgs, index: usize, many: bool, g: &FaceGraph) -> CliResult<Report> {
    let m = g.block_count();
    let pebble_ok = m == 1;
    let routes: Vec<Route> = match a.route {
        RouteArg::Pebble2 | RouteArg::Pebble3 if !pebble_ok => {
            return Err(CliError::Usage(format!(
                "pebble routes need exactly one B face, found {m}; use --route numeric or --route brute"
            )))
        }
        RouteArg::Pebble2 => vec![Route::Pebble2],
        RouteArg::Pebble3 => vec![Route::Pebble3],
        RouteArg::Brute => vec![Route::Brute],
        RouteArg::Numeric => vec![Route::Numeric],
        RouteArg::All if pebble_ok => vec![Route::Pebble2, Route::Pebble3, Route::Brute, Route::Numeric],
        RouteArg::All => vec![Route::Brute, Route::Numeric],
    };
    let outcomes = routes.iter().map(|&r| run_route(s, r, g)).collect::<CliResult<Vec<_>>>()?;

    let (m_class, n_class) = g.class();
    let mut text = format!("class {m_class} {n_class}\n");
    for o in &outcomes {
        writeln!(text, "route {} tight {}", o.route.name(), o.tight).unwrap();
    }
    let agree = outcomes.iter().all(|o| o.tight == outcomes[0].tight);
    if !agree && characterised(g) {
        let detail = outcomes.iter().map(|o| format!("{}={}", o.route.name(), o.tight)).collect::<Vec<_>>().join(" ");
        return Err(CliError::Violation(format!("routes disagree: {detail}")));
    }
    // Outside the characterised class only the rank is authoritative.
    let rigid = if agree {
        outcomes[0].tight
    } else {
        outcomes.iter().find(|o| o.route == Route::Numeric).is_some_and(|o| o.tight)
    };
    if !agree {
        text.push_str("note routes disagree outside the characterised class; verdict follows the rank\n");
    }

    let mut cert_path = None;
    let sections: Vec<_> = outcomes.iter().filter_map(|o| o.orientation.clone()).collect();
    if let Some(path) = &a.cert {
        if !sections.is_empty() {
            let path = entry_path(path, index, many);
            write(&path, &formats::write_orientations(&OrientationCertificate { sections }))?;
            writeln!(text, "certificate {}", path.display()).unwrap();
            cert_path = Some(path.display().to_string());
        }
    }
    let verdict = if rigid { "minimally-rigid" } else { "not-minimally-rigid" };
    writeln!(text, "verdict {verdict}").unwrap();
    let routes_json: Vec<Value> =
        outcomes.iter().map(|o| json!({ "route": o.route.name(), "tight": o.tight })).collect();
    Ok(Report {
        status: if rigid { EXIT_YES } else { EXIT_NO },
        text,
        json: json!({
            "class": [m_class, n_class],
            "routes": routes_json,
            "agree": agree,
            "verdict": verdict,
            "certificate": cert_path,
        }),
    })
}

fn reduce_entry(s: &Settings, a: &ReduceArgs, index: usize, many: bool, g: &FaceGraph) -> CliResult<Report> {
    let cert = match reduce_to_k3(g) {
        Ok(cert) => cert,
        Err(rigidkit_core::Error::NotTight { witness, freedom }) => {
            return Ok(Report {
                status: EXIT_NO,
                text: format!("not tight witness {} freedom {freedom}\n", join(&witness)),
                json: json!({ "tight": false, "witness": witness, "witness_freedom": freedom }),
            })
        }
        Err(rigidkit_core::Error::FreedomNot6 { freedom }) => {
            return Ok(Report {
                status: EXIT_NO,
                text: format!("not tight freedom {freedom}\n"),
                json: json!({ "tight": false, "freedom": freedom }),
            })
        }
        Err(e) => return Err(e.into()),
    };
    let mut text = format!("moves {}\n", cert.len());
    let mut cert_path = None;
    if let Some(path) = &a.cert {
        let path = entry_path(path, index, many);
        write(&path, &formats::write_certificate(&cert))?;
        writeln!(text, "certificate {}", path.display()).unwrap();
        cert_path = Some(path.display().to_string());
    } else if !many {
        text.push_str(&formats::write_certificate(&cert));
    }
    let mut replayed = None;
    if a.replay {
        let rebuilt = replay(&cert)?;
        let dagger = discus_and_hole(g);
        let same = rebuilt.vertex_count() == dagger.vertex_count()
            && (rebuilt.edge_set() == dagger.edge_set()
                || canonical_hash_bounded(&rebuilt, s.bound36)? == canonical_hash_bounded(&dagger, s.bound36)?);
        if !same {
            return Err(CliError::Violation("replay does not rebuild the discus-and-hole graph".into()));
        }
        text.push_str("replay isomorphic true\n");
        replayed = Some(true);
    }
    Ok(Report {
        status: EXIT_YES,
        text,
        json: json!({
            "tight": true,
            "moves": cert.moves.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "certificate": cert_path,
            "replay": replayed,
        }),
    })
}

fn csc_entry(s: &Settings, a: &CscArgs, g: &FaceGraph) -> CliResult<Report> {
    let search = CycleSearch {
        nonfacial_only: a.nonfacial,
        oracle: match a.oracle {
            OracleArg::Pebble => CriticalityOracle::Pebble,
            OracleArg::Brute => CriticalityOracle::Brute,
        },
        max_vertices: s.cycle_bound,
        cap: DEFAULT_CYCLE_CAP,
    };
    let cycles = enumerate_critical_separating_cycles_with(g, &search)?;
    let mut text = String::new();
    let mut listed = Vec::new();
    for c in &cycles {
        let tag = if g.is_face_boundary(c.vertices()) { "facial" } else { "nonfacial" };
        writeln!(text, "cycle {} {tag}", join(c.vertices())).unwrap();
        listed.push(json!({ "vertices": c.vertices(), "facial": tag == "facial" }));
    }
    writeln!(text, "count {}", cycles.len()).unwrap();
    Ok(Report { status: EXIT_YES, text, json: json!({ "cycles": listed }) })
}

fn origami(s: &Settings, a: &OrigamiArgs) -> CliResult<Report> {
    let surface = formats::parse_surface(&read(&a.file)?)?;
    let style = match a.block {
        BlockArg::Apex => BlockStyle::Apex,
        BlockArg::Prism => BlockStyle::Prism,
        BlockArg::Discus => BlockStyle::Discus,
    };
    let conv = origami_to_block_and_hole(&surface, style)?;
    let g = &conv.face_graph;
    let hat = &conv.graph.realized;
    let mut text = formats::write_facegraph(g);
    writeln!(text, "block {}", style.as_str()).unwrap();
    text.push_str(&formats::write_multigraph(hat.as_multigraph()));

    let rank = euclidean_rigidity_rank_from(hat, DEFAULT_SEEDS, s.seed)?;
    let rigid = rank.verdict == RankVerdict::MinimallyRigid;
    let mut routes = vec![(Route::Numeric, rigid)];
    if hat.vertex_count() <= s.bound36 {
        routes.push((Route::Brute, check_36_bounded(hat, s.bound36)?.tight));
    }
    if g.block_count() == 1 {
        for r in [Route::Pebble2, Route::Pebble3] {
            routes.push((r, run_route(s, r, g)?.tight));
        }
    }
    writeln!(text, "rank {rank}").unwrap();
    for (r, t) in &routes {
        writeln!(text, "route {} tight {t}", r.name()).unwrap();
    }
    // The combinatorial routes describe discus blocks; other blocks only
    // change the realization, which the rank covers.
    let agree = routes.iter().all(|(_, t)| *t == rigid);
    if !agree && characterised(g) && style == BlockStyle::Discus {
        return Err(CliError::Violation("routes disagree on the converted surface".into()));
    }
    if !conv.coplanar_panels.is_empty() {
        writeln!(
            text,
            "caveat panels {} have coplanar boundaries; the verdict is for generic positions",
            join(&conv.coplanar_panels)
        )
        .unwrap();
    }
    let verdict = if rigid { "minimally-rigid" } else { "not-minimally-rigid" };
    writeln!(text, "framework {}", rank.verdict.as_str()).unwrap();
    writeln!(text, "verdict {verdict}").unwrap();
    Ok(Report {
        status: if rigid { EXIT_YES } else { EXIT_NO },
        text,
        json: json!({
            "framework": rank.verdict.as_str(),
            "facegraph": formats::write_facegraph(g),
            "realized_vertices": hat.vertex_count(),
            "realized_edges": hat.edges(),
            "rank": rank.rank,
            "routes": routes.iter().map(|(r, t)| json!({ "route": r.name(), "tight": t })).collect::<Vec<_>>(),
            "coplanar_panels": conv.coplanar_panels,
            "verdict": verdict,
        }),
    })
}

fn gen(seed: u64, a: &GenArgs) -> CliResult<Report> {
    let mut config = CorpusConfig::new(a.vertices, a.holes, a.count, seed);
    if let Some(min) = a.min_vertices {
        config.min_vertices = min;
    }
    config.single_block = a.single_block;
    config.strategy = match a.strategy {
        StrategyArg::Mixed => CarveStrategy::Mixed,
        StrategyArg::Random => CarveStrategy::Random,
        StrategyArg::Balanced => CarveStrategy::Balanced,
        StrategyArg::BalancedQuads => CarveStrategy::BalancedQuads,
        StrategyArg::MaximalQuads => CarveStrategy::MaximalQuads,
    };
    let corpus = generate_corpus(&config)?;
    let archive = formats::write_archive(corpus.iter().map(|e| (&e.graph, &e.class)));
    let mut summary = String::new();
    let mut entries = Vec::new();
    for (i, e) in corpus.iter().enumerate() {
        let state = if e.class.tight { "tight" } else { "nontight" };
        writeln!(
            summary,
            "graph {i} vertices {} class {} {} {state} digest {}",
            e.graph.vertex_count(),
            e.class.m,
            e.class.n,
            e.digest
        )
        .unwrap();
        entries.push(json!({
            "vertices": e.graph.vertex_count(),
            "class": [e.class.m, e.class.n],
            "tight": e.class.tight,
            "digest": e.digest.to_string(),
        }));
    }
    let text = match &a.out {
        Some(path) => {
            write(path, &archive)?;
            writeln!(summary, "wrote {} graphs to {}", corpus.len(), path.display()).unwrap();
            summary
        }
        None => archive,
    };
    Ok(Report { status: EXIT_YES, text, json: json!({ "graphs": entries }) })
}

fn verify_entry(a: &VerifyArgs, index: usize, many: bool, g: &FaceGraph) -> CliResult<Report> {
    if let Some(path) = &a.reduction {
        let path = entry_path(path, index, many);
        let cert = formats::parse_certificate(&read(&path)?)?;
        let valid = match verify_certificate(g, &cert) {
            Ok(valid) => valid,
            Err(rigidkit_core::Error::InvalidCertificate(msg)) => {
                return Ok(Report {
                    status: EXIT_NO,
                    text: format!("reduction valid false reason {msg}\n"),
                    json: json!({ "kind": "reduction", "valid": false, "reason": msg }),
                })
            }
            Err(e) => return Err(e.into()),
        };
        let valid = valid && cert.len() + 3 == discus_and_hole(g).vertex_count();
        return Ok(Report {
            status: if valid { EXIT_YES } else { EXIT_NO },
            text: format!("reduction valid {valid}\n"),
            json: json!({ "kind": "reduction", "valid": valid }),
        });
    }
    let path = entry_path(a.orientation.as_ref().expect("clap requires a certificate"), index, many);
    let cert = formats::parse_orientations(&read(&path)?)?;
    let mut text = String::new();
    let mut all = true;
    let mut sections = Vec::new();
    for (looped, o) in &cert.sections {
        let m = match looped {
            Looped::TwoSigma => looped_2sigma(g)?,
            Looped::ThreeSigma => looped_3sigma_minus(g)?,
        };
        let valid = m.edge_count() == 3 * m.vertex_count()
            && o.len() == m.edge_count()
            && verify_orientation(&m, o, 3, OutdegreeBound::Exactly)?;
        all &= valid;
        writeln!(text, "orientation {} valid {valid}", looped.as_str()).unwrap();
        sections.push(json!({ "looped": looped, "valid": valid }));
    }
    Ok(Report {
        status: if all { EXIT_YES } else { EXIT_NO },
        text,
        json: json!({ "kind": "orientation", "sections": sections, "valid": all }),
    })
}

fn oracle(s: &Settings, a: &OracleArgs, input: &GraphInput) -> CliResult<Report> {
    let report = match (a.sparsity, input) {
        (SparsityArg::ThreeSix, GraphInput::Multigraph(m)) => {
            check_36_bounded(&SimpleGraph::try_from_multigraph(m)?, s.bound36)?
        }
        (SparsityArg::ThreeSix, GraphInput::FaceGraph(g)) => check_36_bounded(&realized(g)?, s.bound36)?,
        (SparsityArg::ThreeZero, GraphInput::Multigraph(m)) => check_30_bounded(m, s.bound30)?,
        (SparsityArg::ThreeZero, GraphInput::FaceGraph(g)) => check_30_bounded(&looped_2sigma(g)?, s.bound30)?,
    };
    let name = match a.sparsity {
        SparsityArg::ThreeSix => "36",
        SparsityArg::ThreeZero => "30",
    };
    let mut text = format!("sparsity {name} tight {} sparse {}\n", report.tight, report.sparse);
    if let (Some(w), Some(f)) = (&report.witness, report.witness_freedom) {
        writeln!(text, "witness {} freedom {f}", join(w)).unwrap();
    }
    Ok(Report { status: if report.tight { EXIT_YES } else { EXIT_NO }, text, json: sparsity_json(&report) })
}

fn numeric(s: &Settings, a: &NumericArgs, input: &GraphInput) -> CliResult<Report> {
    let g = match input {
        GraphInput::Multigraph(m) => SimpleGraph::try_from_multigraph(m)?,
        GraphInput::FaceGraph(g) => realized(g)?,
    };
    let rank = euclidean_rigidity_rank_from(&g, a.seeds, s.seed)?;
    let mut text = format!("{rank}\n");
    let mut json = json!({
        "rank": rank.rank,
        "target": rank.target,
        "verdict": rank.verdict.as_str(),
        "seeds": rank.seeds_used,
    });
    if a.experimental_lp_rigidity {
        let lp = lp_independence_report(&g, a.p, a.trials, a.tol, s.seed)?;
        writeln!(
            text,
            "lp p {} independent {} ranks {} edges {} min-relative-singular-value {:e}",
            a.p,
            lp.independent,
            join(&lp.ranks),
            lp.edges,
            lp.min_relative_singular_value
        )
        .unwrap();
        json["lp"] = serde_json::to_value(&lp).expect("lp report serializes");
    }
    let status = if rank.verdict == RankVerdict::MinimallyRigid { EXIT_YES } else { EXIT_NO };
    Ok(Report { status, text, json })
}
