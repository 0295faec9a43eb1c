//! Command definitions and their implementations.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use backarc::generate::InstanceSpec;
use backarc::graph::dot::to_dot;
use backarc::graph::format::{parse_digraph, write_digraph, DigraphFile};
use backarc::oracle::{Oracle, HARD_CAP};
use backarc::orcycle::{hamilton_orcycle_with, CycleConfig, CONSTRUCTIVE_FROM};
use backarc::orpath::hamilton_orpath;
use backarc::{Digraph, SolveError, SolverTrace, Vertex};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::certificate::{Certificate, Kind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

pub const PATH_BOUND: usize = 2;
pub const CYCLE_BOUND: usize = 5;

#[derive(Debug, Parser)]
#[command(name = "backarc", version, about = "Hamilton orpaths and orcycles with few backward arcs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a digraph file from an instance family.
    Gen(GenArgs),
    /// Hamilton orpath with at most two backward arcs.
    SolvePath(SolveArgs),
    /// Hamilton orcycle with at most five backward arcs.
    SolveCycle(CycleArgs),
    /// Exact minimum by subset dynamic programming.
    Oracle(OracleArgs),
    /// Check a certificate against a digraph.
    Verify(VerifyArgs),
    /// Solve a sweep of generated instances and compare with the oracle.
    Bench(BenchArgs),
    /// Graphviz rendering, optionally highlighting a certificate.
    ExportDot(DotArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Full instance spec, e.g. `alpha2:n=10,conn=two,seed=3`. Overrides the other flags.
    #[arg(long)]
    pub spec: Option<String>,
    /// fig1, dk, alpha2, tournament, semicomplete or bridge.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub digon: Option<f64>,
    /// none, connected or two.
    #[arg(long)]
    pub conn: Option<String>,
    /// bipartite, trianglefree or mixed.
    #[arg(long)]
    pub mode: Option<String>,
    #[arg(long)]
    pub density: Option<f64>,
    #[arg(long)]
    pub bridges: Option<usize>,
    #[arg(long)]
    pub randomized: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub graph: PathBuf,
    /// Certificate destination; standard output when absent.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CycleArgs {
    #[command(flatten)]
    pub io: SolveArgs,
    /// Smallest order handled by the case analysis.
    #[arg(long, default_value_t = CONSTRUCTIVE_FROM)]
    pub constructive_from: usize,
    /// Answer with the exact oracle if an internal assertion fires.
    #[arg(long)]
    pub oracle_fallback: bool,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    pub graph: PathBuf,
    /// Minimise over orcycles instead of orpaths.
    #[arg(long)]
    pub cycle: bool,
    #[arg(long, conflicts_with = "cycle")]
    pub start: Option<Vertex>,
    #[arg(long, conflicts_with = "cycle")]
    pub end: Option<Vertex>,
    #[arg(long, default_value_t = backarc::oracle::DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub graph: PathBuf,
    pub certificate: PathBuf,
    /// Bound to check instead of the one recorded in the certificate.
    #[arg(long)]
    pub bound: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchMode {
    Path,
    Cycle,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Instance spec; its seed is replaced by each seed of the sweep. Repeatable.
    #[arg(long, required = true)]
    pub spec: Vec<String>,
    /// Seed range `a..b` (end exclusive) or a single seed.
    #[arg(long, default_value = "0..10")]
    pub seeds: String,
    #[arg(long, value_enum, default_value_t = BenchMode::Cycle)]
    pub mode: BenchMode,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Largest order sent to the oracle.
    #[arg(long, default_value_t = backarc::oracle::DEFAULT_CAP)]
    pub oracle_cap: usize,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DotArgs {
    pub graph: PathBuf,
    #[arg(long)]
    pub certificate: Option<PathBuf>,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

/// A failed command: exit status, a short machine-readable reason and detail.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub reason: String,
    pub message: String,
    pub trace: Vec<String>,
}

impl Failure {
    fn new(code: i32, reason: impl Into<String>, message: impl Into<String>) -> Self {
        Failure {
            code,
            reason: reason.into(),
            message: message.into(),
            trace: Vec::new(),
        }
    }

    fn pre(reason: &str, message: impl Into<String>) -> Self {
        Failure::new(EXIT_PRECONDITION, reason, message)
    }

    /// The line written to standard error.
    pub fn reason_line(&self) -> String {
        format!("error: reason={} {}", self.reason, self.message)
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        let code = if e.is_internal() { EXIT_INTERNAL } else { EXIT_PRECONDITION };
        let trace = match &e {
            SolveError::Internal { trace, .. } => trace.summary_lines(),
            _ => Vec::new(),
        };
        Failure {
            code,
            reason: e.kind().to_string(),
            message: e.to_string(),
            trace,
        }
    }
}

/// Runs a parsed command, writing results to standard output or the
/// requested files. Returns the exit status.
pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::SolvePath(a) => solve_path(a),
        Command::SolveCycle(a) => solve_cycle(a),
        Command::Oracle(a) => oracle(a),
        Command::Verify(a) => verify(a),
        Command::Bench(a) => bench(a),
        Command::ExportDot(a) => export_dot(a),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("{}", f.reason_line());
            for line in &f.trace {
                eprintln!("trace {line}");
            }
            f.code
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::pre("io", format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::pre("io", format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::pre("io", e.to_string()))
        }
    }
}

fn load_graph(path: &Path) -> Result<DigraphFile, Failure> {
    parse_digraph(&read(path)?).map_err(|e| Failure::pre("parse", format!("{}: {e}", path.display())))
}

fn instance_of(file: &DigraphFile) -> Option<String> {
    file.comments
        .iter()
        .find_map(|c| c.strip_prefix("instance:").map(|s| s.trim().to_string()))
}

/// The instance spec text assembled from individual `gen` flags.
pub fn spec_from_flags(a: &GenArgs) -> Result<InstanceSpec, Failure> {
    let text = match &a.spec {
        Some(s) => s.clone(),
        None => {
            let family = a
                .family
                .as_deref()
                .ok_or_else(|| Failure::pre("parse", "either --spec or --family is required"))?;
            let mut kv: Vec<String> = Vec::new();
            let mut put = |k: &str, v: Option<String>| {
                if let Some(v) = v {
                    kv.push(format!("{k}={v}"));
                }
            };
            put("k", a.k.map(|v| v.to_string()));
            put("m", a.m.map(|v| v.to_string()));
            put("n", a.n.map(|v| v.to_string()));
            put("digon", a.digon.map(|v| v.to_string()));
            put("conn", a.conn.clone());
            put("mode", a.mode.clone());
            put("density", a.density.map(|v| v.to_string()));
            put("bridges", a.bridges.map(|v| v.to_string()));
            put("randomized", a.randomized.then(|| "true".to_string()));
            put("seed", Some(a.seed.to_string()));
            format!("{family}:{}", kv.join(","))
        }
    };
    text.parse().map_err(|e: backarc::generate::GenError| Failure::pre("parse", e.to_string()))
}

fn gen(a: GenArgs) -> Result<i32, Failure> {
    let spec = spec_from_flags(&a)?;
    let d = spec
        .generate()
        .map_err(|e| Failure::pre("generate", e.to_string()))?;
    let file = DigraphFile::new(d).with_comment(format!("instance: {spec}"));
    emit(a.out.as_deref(), &write_digraph(&file))?;
    Ok(EXIT_OK)
}

fn certify(
    file: &DigraphFile,
    kind: Kind,
    seq: Vec<Vertex>,
    bound: usize,
    trace: &SolverTrace,
) -> Result<Certificate, Failure> {
    let cert = Certificate::new(&file.digraph, kind, seq, bound)
        .with_trace(trace.summary_lines())
        .with_instance(instance_of(file));
    let report = cert.verify(&file.digraph);
    if !report.passed() {
        let failed: Vec<String> = report.failures().map(|c| format!("{} ({})", c.name, c.detail)).collect();
        return Err(Failure {
            code: EXIT_INTERNAL,
            reason: "internal-assertion".into(),
            message: format!("solver output fails verification: {}", failed.join("; ")),
            trace: trace.summary_lines(),
        });
    }
    Ok(cert)
}

fn solve_path(a: SolveArgs) -> Result<i32, Failure> {
    let file = load_graph(&a.graph)?;
    let (path, trace) = hamilton_orpath(&file.digraph)?;
    let cert = certify(&file, Kind::Orpath, path.into_vertices(), PATH_BOUND, &trace)?;
    emit(a.out.as_deref(), &cert.to_text())?;
    Ok(EXIT_OK)
}

fn solve_cycle(a: CycleArgs) -> Result<i32, Failure> {
    let file = load_graph(&a.io.graph)?;
    let config = CycleConfig {
        constructive_from: a.constructive_from,
        oracle_fallback: a.oracle_fallback,
    };
    let (cycle, trace) = hamilton_orcycle_with(&file.digraph, &config)?;
    let cert = certify(&file, Kind::Orcycle, cycle.vertices().to_vec(), CYCLE_BOUND, &trace)?;
    emit(a.io.out.as_deref(), &cert.to_text())?;
    Ok(EXIT_OK)
}

fn oracle(a: OracleArgs) -> Result<i32, Failure> {
    let file = load_graph(&a.graph)?;
    let o = Oracle::with_cap(a.cap);
    let result = if a.cycle {
        o.min_backward_orcycle(&file.digraph)
    } else {
        o.min_backward_orpath(&file.digraph, a.start, a.end)
    }
    .map_err(|e| Failure::pre("oracle", e.to_string()))?;
    let mut text = match result.minimum {
        Some(m) => format!("minimum {m}\n"),
        None => "minimum infeasible\n".to_string(),
    };
    if let Some(w) = &result.witness {
        let w: Vec<String> = w.iter().map(|v| v.to_string()).collect();
        text.push_str(&format!("witness {}\n", w.join(" ")));
    }
    text.push_str(&format!("states {}\n", result.states_explored));
    emit(None, &text)?;
    Ok(EXIT_OK)
}

fn verify(a: VerifyArgs) -> Result<i32, Failure> {
    let file = load_graph(&a.graph)?;
    let mut cert = Certificate::parse(&read(&a.certificate)?).map_err(|e| Failure::pre("parse", e.to_string()))?;
    if let Some(b) = a.bound {
        cert.bound = b;
    }
    let report = cert.verify(&file.digraph);
    let mut text = String::new();
    for c in &report.checks {
        let status = if c.passed { "pass" } else { "FAIL" };
        if c.detail.is_empty() {
            text.push_str(&format!("{status} {}\n", c.name));
        } else {
            text.push_str(&format!("{status} {}: {}\n", c.name, c.detail));
        }
    }
    let passed = report.passed();
    text.push_str(if passed { "result pass\n" } else { "result fail\n" });
    emit(None, &text)?;
    Ok(if passed { EXIT_OK } else { EXIT_VERIFY })
}

/// Parses `a..b` (end exclusive) or a single seed.
pub fn parse_seeds(s: &str) -> Result<std::ops::Range<u64>, Failure> {
    let bad = || Failure::pre("parse", format!("bad seed range {s:?}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b): (u64, u64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
            if a > b {
                return Err(bad());
            }
            Ok(a..b)
        }
        None => {
            let a: u64 = s.trim().parse().map_err(|_| bad())?;
            Ok(a..a + 1)
        }
    }
}

/// One `bench` result row.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub instance: String,
    pub n: usize,
    pub sigma_constructive: Option<usize>,
    pub sigma_oracle: Option<usize>,
    pub bound: usize,
    pub case: String,
    pub runtime_us: u128,
    pub status: String,
}

impl BenchRow {
    pub fn flagged(&self) -> bool {
        self.status != "ok"
    }
}

pub const BENCH_HEADER: [&str; 8] = [
    "instance",
    "n",
    "sigma_constructive",
    "sigma_oracle",
    "bound",
    "case",
    "runtime_us",
    "status",
];

pub fn bench_one(spec: &InstanceSpec, mode: BenchMode, oracle_cap: usize) -> BenchRow {
    let bound = match mode {
        BenchMode::Path => PATH_BOUND,
        BenchMode::Cycle => CYCLE_BOUND,
    };
    let mut row = BenchRow {
        instance: spec.to_string(),
        n: 0,
        sigma_constructive: None,
        sigma_oracle: None,
        bound,
        case: String::new(),
        runtime_us: 0,
        status: "ok".into(),
    };
    let d = match spec.generate() {
        Ok(d) => d,
        Err(e) => {
            row.status = format!("generate-error: {e}");
            return row;
        }
    };
    row.n = d.n();
    let started = Instant::now();
    let solved = match mode {
        BenchMode::Path => hamilton_orpath(&d).map(|(p, t)| (p.sigma_minus(), t)),
        BenchMode::Cycle => hamilton_orcycle_with(&d, &CycleConfig::default()).map(|(c, t)| (c.sigma_minus(), t)),
    };
    row.runtime_us = started.elapsed().as_micros();
    match solved {
        Ok((s, t)) => {
            row.sigma_constructive = Some(s);
            row.case = t.top_case().unwrap_or("").to_string();
        }
        Err(e) => {
            row.status = format!("solve-error: {}", e.kind());
            return row;
        }
    }
    if d.n() <= oracle_cap.min(HARD_CAP) {
        let o = Oracle::with_cap(oracle_cap);
        let exact = match mode {
            BenchMode::Path => o.min_backward_orpath(&d, None, None),
            BenchMode::Cycle => o.min_backward_orcycle(&d),
        };
        row.sigma_oracle = exact.ok().and_then(|r| r.minimum);
    }
    let s = row.sigma_constructive.unwrap_or(usize::MAX);
    if s > bound {
        row.status = "above-bound".into();
    } else if row.sigma_oracle.is_some_and(|o| o > s) {
        row.status = "below-oracle".into();
    }
    row
}

fn bench(a: BenchArgs) -> Result<i32, Failure> {
    let seeds = parse_seeds(&a.seeds)?;
    let mut specs = Vec::new();
    for text in &a.spec {
        let base: InstanceSpec = text.parse().map_err(|e: backarc::generate::GenError| Failure::pre("parse", e.to_string()))?;
        for seed in seeds.clone() {
            specs.push(InstanceSpec::new(base.family.clone(), seed));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs)
        .build()
        .map_err(|e| Failure::new(EXIT_INTERNAL, "threads", e.to_string()))?;
    let rows: Vec<BenchRow> = pool.install(|| specs.par_iter().map(|s| bench_one(s, a.mode, a.oracle_cap)).collect());

    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Failure::new(EXIT_INTERNAL, "io", e.to_string());
    w.write_record(BENCH_HEADER).map_err(csv_err)?;
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    for r in &rows {
        w.write_record([
            r.instance.clone(),
            r.n.to_string(),
            opt(r.sigma_constructive),
            opt(r.sigma_oracle),
            r.bound.to_string(),
            r.case.clone(),
            r.runtime_us.to_string(),
            r.status.clone(),
        ])
        .map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::new(EXIT_INTERNAL, "io", e.to_string()))?;
    emit(a.out.as_deref(), &String::from_utf8_lossy(&bytes))?;
    let flagged = rows.iter().filter(|r| r.flagged()).count();
    if flagged > 0 {
        eprintln!("error: reason=bench-flagged {flagged} of {} rows flagged", rows.len());
        return Ok(EXIT_VERIFY);
    }
    Ok(EXIT_OK)
}

fn export_dot(a: DotArgs) -> Result<i32, Failure> {
    let file = load_graph(&a.graph)?;
    let cert = match &a.certificate {
        Some(p) => Some(Certificate::parse(&read(p)?).map_err(|e| Failure::pre("parse", e.to_string()))?),
        None => None,
    };
    let walk = cert.as_ref().map(|c| (c.sequence.as_slice(), c.kind.closed()));
    if let Some((seq, _)) = walk {
        if let Some(&v) = seq.iter().find(|&&v| v >= file.digraph.n()) {
            return Err(Failure::pre("parse", format!("certificate vertex {v} out of range")));
        }
    }
    emit(a.out.as_deref(), &to_dot(&file.digraph, walk))?;
    Ok(EXIT_OK)
}

/// Digraph read from `path`, for callers outside this module.
pub fn read_digraph(path: &Path) -> Result<Digraph, Failure> {
    load_graph(path).map(|f| f.digraph)
}
