//! Command-line front end: generate graphs, run checks, batch over corpora,
//! and replay certificates.
//!
//! Exit codes follow the check-outcome contract: 0 everything passed, 1 a
//! theorem-level claim failed, 2 a conjecture-level claim failed, 3 some
//! check was inconclusive or could not run. Hard errors (unreadable or
//! unparsable input, bad generator arguments) exit 64; clap keeps its usual
//! exit 2 for usage errors.

use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use tricub::covers::{self, CoverCertificate};
use tricub::graph::{
    decode_sparse6, encode_sparse6, generate, generate_from_tree, parse_edge_list, random_cubic,
    serialize_edge_list, DegreeTree, EdgeId, Gadget, GraphName, Multigraph, VertexId,
};
use tricub::hcoloring::{self, ColoringSearch};
use tricub::params::{
    self, BoundsOptions, ParamCertificate, ParamKind, ParamWitness, EXIT_CONJECTURE_FAIL,
    EXIT_INCONCLUSIVE, EXIT_PASS, EXIT_THEOREM_FAIL,
};
use tricub::structure::bridge_edges;

/// Exit code for hard errors, outside the 0-3 outcome space.
const EXIT_HARD_ERROR: i32 = 64;
/// Node budget for the Petersen-coloring search in the `hcolor` check.
const HCOLOR_NODE_BUDGET: u64 = 50_000_000;

#[derive(Parser)]
#[command(
    name = "tricub",
    version,
    about = "Exact triangle-expansion analysis for cubic multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a catalog, family, or random cubic graph.
    Gen(GenArgs),
    /// Run selected checks on one graph.
    Analyze(AnalyzeArgs),
    /// Run checks over a directory or list of graphs, one record per graph.
    Batch(BatchArgs),
    /// Replay a certificate (or every certificate in an analyze report)
    /// against its host graph.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
enum FormatArg {
    #[default]
    Edgelist,
    Sparse6,
}

#[derive(Args, Clone)]
struct OutOpts {
    /// Output file (stdout when omitted).
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
    format: FormatArg,
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct GenArgs {
    /// Catalog graph name: K4, K33, P10, P12, S10, S16, W, Wprime, theta.
    name: Option<String>,
    #[command(flatten)]
    out: OutOpts,
    #[command(subcommand)]
    source: Option<GenSource>,
}

#[derive(Subcommand)]
enum GenSource {
    /// Gadget family member over the caterpillar degree-1/3 tree on n vertices.
    Family {
        /// Gadget name: W or Wprime.
        #[arg(long)]
        gadget: String,
        /// Tree order (even, >= 2).
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Seeded random connected cubic multigraph.
    Random {
        /// Number of vertices (even).
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Forbid parallel edges.
        #[arg(long)]
        simple: bool,
        #[command(flatten)]
        out: OutOpts,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckName {
    /// Matching expansion parameter t.
    #[value(name = "t")]
    MatchingParam,
    /// Cover expansion parameter T.
    #[value(name = "T")]
    CoverParam,
    Scc,
    Cdc,
    Hcolor,
    Gallai,
    Bounds,
}

impl CheckName {
    fn key(self) -> &'static str {
        match self {
            CheckName::MatchingParam => "t",
            CheckName::CoverParam => "T",
            CheckName::Scc => "scc",
            CheckName::Cdc => "cdc",
            CheckName::Hcolor => "hcolor",
            CheckName::Gallai => "gallai",
            CheckName::Bounds => "bounds",
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Graph file; `-` reads stdin.
    input: PathBuf,
    /// Input encoding; sniffed from the content when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Comma-separated checks: t, T, scc, cdc, hcolor, gallai, bounds.
    #[arg(long, value_delimiter = ',', default_value = "t,gallai,bounds")]
    checks: Vec<CheckName>,
    /// Largest expansion-set size tried for the cover parameter.
    #[arg(long, default_value_t = 2)]
    budget: usize,
    /// Wall-clock limit in seconds for the cover-parameter search.
    #[arg(long)]
    timeout: Option<f64>,
    /// Emit one JSON document (sorted keys, no timing: byte-stable).
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BatchArgs {
    /// Directory of graph files, or a list file with --list.
    input: PathBuf,
    /// Treat INPUT as a text file of graph paths, one per line.
    #[arg(long)]
    list: bool,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    #[arg(long, value_delimiter = ',', default_value = "t,gallai,bounds")]
    checks: Vec<CheckName>,
    #[arg(long, default_value_t = 2)]
    budget: usize,
    #[arg(long)]
    timeout: Option<f64>,
    /// Concurrent per-graph workers.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Output file (stdout when omitted).
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// JSON-lines records instead of CSV.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Graph file the certificate claims to describe.
    graph: PathBuf,
    /// Certificate JSON: a bare envelope or an `analyze --json` report.
    certificate: PathBuf,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

/// Restore the default SIGPIPE disposition so piping into `head` and friends
/// ends the process quietly instead of panicking on a broken pipe.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() {
    reset_sigpipe();
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Batch(args) => cmd_batch(args),
        Command::Verify(args) => cmd_verify(args),
    };
    let code = match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_HARD_ERROR
        }
    };
    std::process::exit(code);
}

// ---------------------------------------------------------------------------
// Input / output plumbing
// ---------------------------------------------------------------------------

fn parse_graph(raw: &str, fmt: Option<FormatArg>) -> Result<Multigraph> {
    let g = match fmt {
        Some(FormatArg::Edgelist) => parse_edge_list(raw)?,
        Some(FormatArg::Sparse6) => decode_sparse6(raw)?,
        None => {
            let t = raw.trim_start();
            if t.starts_with(">>sparse6<<") || t.starts_with(':') {
                decode_sparse6(raw)?
            } else {
                parse_edge_list(raw)?
            }
        }
    };
    Ok(g)
}

fn load_graph(path: &Path, fmt: Option<FormatArg>) -> Result<Multigraph> {
    let raw = if path == Path::new("-") {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        buf
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_graph(&raw, fmt).with_context(|| format!("parsing {}", path.display()))
}

fn render_graph(g: &Multigraph, format: FormatArg) -> String {
    match format {
        FormatArg::Edgelist => serialize_edge_list(g),
        FormatArg::Sparse6 => {
            let mut s = encode_sparse6(g);
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    }
}

fn write_output(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

fn parse_gadget(s: &str) -> Result<Gadget> {
    match s.to_ascii_lowercase().as_str() {
        "w" => Ok(Gadget::W),
        "wprime" | "w'" => Ok(Gadget::WPrime),
        other => bail!("unknown gadget {other:?}; expected W or Wprime"),
    }
}

fn cmd_gen(args: GenArgs) -> Result<i32> {
    let (g, out) = match (args.name, args.source) {
        (Some(name), None) => {
            let name = GraphName::from_str(&name).map_err(|e| anyhow!(e))?;
            (generate(name), args.out)
        }
        (None, Some(GenSource::Family { gadget, n, out })) => {
            let gadget = parse_gadget(&gadget)?;
            let tree = DegreeTree::caterpillar(n)?;
            (generate_from_tree(&tree, gadget), out)
        }
        (None, Some(GenSource::Random { n, seed, simple, out })) => {
            (random_cubic(n, simple, seed)?, out)
        }
        _ => bail!("specify a catalog name (e.g. `gen P10`) or a subcommand (`gen family`, `gen random`)"),
    };
    write_output(&render_graph(&g, out.format), out.out.as_deref())?;
    Ok(EXIT_PASS)
}

// ---------------------------------------------------------------------------
// Checks shared by analyze and batch
// ---------------------------------------------------------------------------

#[derive(Clone)]
struct SolverConfig {
    budget: usize,
    timeout: Option<Duration>,
    checks: Vec<CheckName>,
}

impl SolverConfig {
    fn new(budget: usize, timeout_secs: Option<f64>, checks: &[CheckName]) -> Result<Self> {
        let timeout = match timeout_secs {
            Some(s) => {
                ensure!(s >= 0.0 && s.is_finite(), "timeout must be a nonnegative number");
                Some(Duration::from_secs_f64(s))
            }
            None => None,
        };
        let mut deduped = Vec::new();
        for &c in checks {
            if !deduped.contains(&c) {
                deduped.push(c);
            }
        }
        Ok(SolverConfig {
            budget,
            timeout,
            checks: deduped,
        })
    }

    fn as_json(&self) -> Value {
        json!({
            "budget": self.budget,
            "timeout_secs": self.timeout.map(|d| d.as_secs_f64()),
            "checks": self.checks.iter().map(|c| c.key()).collect::<Vec<_>>(),
        })
    }

    fn as_flag_string(&self) -> String {
        let checks: Vec<&str> = self.checks.iter().map(|c| c.key()).collect();
        let timeout = match self.timeout {
            Some(d) => format!("{}", d.as_secs_f64()),
            None => "none".into(),
        };
        format!(
            "checks={};budget={};timeout={}",
            checks.join("+"),
            self.budget,
            timeout
        )
    }
}

/// One check's outcome: the JSON payload, a human line (possibly multi-line),
/// a compact CSV cell, and the exit-code contribution.
struct CheckResult {
    value: Value,
    text: String,
    compact: String,
    code: i32,
}

fn check_error(e: impl std::fmt::Display) -> CheckResult {
    CheckResult {
        value: json!({ "error": e.to_string() }),
        text: format!("error: {e}"),
        compact: "error".into(),
        code: EXIT_INCONCLUSIVE,
    }
}

fn param_envelope(g: &Multigraph, cert: &ParamCertificate) -> Value {
    let members: Vec<Vec<EdgeId>> = match &cert.witness {
        ParamWitness::Matching(m) => vec![m.clone()],
        ParamWitness::Cover(c) => c.matchings.to_vec(),
    };
    json!({
        "type": cert.kind.as_str(),
        "host_hash": g.content_hash(),
        "value": cert.value,
        "witness_u": cert.witness_u,
        "exact": cert.exact,
        "members": members,
    })
}

fn cover_envelope(g: &Multigraph, kind: &str, members: Vec<Vec<EdgeId>>) -> Value {
    json!({
        "type": kind,
        "host_hash": g.content_hash(),
        "members": members,
    })
}

fn run_check(g: &Multigraph, check: CheckName, cfg: &SolverConfig) -> CheckResult {
    match check {
        CheckName::MatchingParam => match params::t_exact(g) {
            Ok(cert) => CheckResult {
                value: json!({
                    "value": cert.value,
                    "exact": cert.exact,
                    "witness_u": cert.witness_u,
                    "certificate": param_envelope(g, &cert),
                }),
                text: format!("{} (exact; expand {:?})", cert.value, cert.witness_u),
                compact: cert.value.to_string(),
                code: EXIT_PASS,
            },
            Err(e) => check_error(e),
        },
        CheckName::CoverParam => match params::big_t_exact(g, cfg.budget, cfg.timeout) {
            Ok(cert) => CheckResult {
                value: json!({
                    "value": cert.value,
                    "exact": cert.exact,
                    "witness_u": cert.witness_u,
                    "certificate": param_envelope(g, &cert),
                }),
                text: format!(
                    "{} ({}; expand {:?})",
                    cert.value,
                    if cert.exact { "exact" } else { "upper bound" },
                    cert.witness_u
                ),
                compact: if cert.exact {
                    cert.value.to_string()
                } else {
                    format!("<={}", cert.value)
                },
                code: EXIT_PASS,
            },
            Err(params::ParamsError::Inconclusive { reason }) => CheckResult {
                value: json!({ "inconclusive": reason }),
                text: format!("inconclusive: {reason}"),
                compact: "inconclusive".into(),
                code: EXIT_INCONCLUSIVE,
            },
            Err(e) => check_error(e),
        },
        CheckName::Scc => match covers::scc_exact(g, 4) {
            Ok(res) => {
                let target = format!("4/3|E| = {}/3", 4 * g.edge_count());
                CheckResult {
                    value: json!({
                        "length": res.length,
                        "exact": res.exact,
                        "members": res.cover.members.len(),
                        "meets_four_thirds": 3 * res.length == 4 * g.edge_count(),
                        "certificate": cover_envelope(g, "cycle_cover", res.cover.members.clone()),
                    }),
                    text: format!(
                        "{} ({}; {} members; {target})",
                        res.length,
                        if res.exact { "exact" } else { "upper bound" },
                        res.cover.members.len()
                    ),
                    compact: if res.exact {
                        res.length.to_string()
                    } else {
                        format!("<={}", res.length)
                    },
                    code: if res.exact { EXIT_PASS } else { EXIT_INCONCLUSIVE },
                }
            }
            Err(e) => check_error(e),
        },
        CheckName::Cdc => match covers::five_cdc(g, true) {
            Ok(Some(cdc)) => CheckResult {
                value: json!({
                    "found": true,
                    "largest_member": cdc.members[0].len(),
                    "certificate": cover_envelope(g, "five_cdc", cdc.members.to_vec()),
                }),
                text: format!(
                    "found (largest member {} of {} edges)",
                    cdc.members[0].len(),
                    g.edge_count()
                ),
                compact: format!("found({})", cdc.members[0].len()),
                code: EXIT_PASS,
            },
            Ok(None) => CheckResult {
                value: json!({ "found": false }),
                text: "absent (exhaustive search)".into(),
                compact: "absent".into(),
                code: EXIT_CONJECTURE_FAIL,
            },
            Err(e) => check_error(e),
        },
        CheckName::Hcolor => {
            let p10 = generate(GraphName::P10);
            match hcoloring::find_hcoloring(g, &p10, HCOLOR_NODE_BUDGET) {
                Ok(ColoringSearch::Found(f)) => match hcoloring::petersen_coloring_to_cdc(g, &f) {
                    Ok(cdc) => CheckResult {
                        value: json!({
                            "found": true,
                            "phi": f.phi,
                            "cdc_largest_member": cdc.members[0].len(),
                            "certificate": cover_envelope(g, "five_cdc", cdc.members.to_vec()),
                        }),
                        text: format!(
                            "found (pullback double cover, largest member {})",
                            cdc.members[0].len()
                        ),
                        compact: "found".into(),
                        code: EXIT_PASS,
                    },
                    Err(e) => check_error(e),
                },
                Ok(ColoringSearch::Exhausted { nodes }) => CheckResult {
                    value: json!({ "found": false, "exhausted": true, "nodes": nodes }),
                    text: "absent (search space exhausted)".into(),
                    compact: "absent".into(),
                    code: EXIT_CONJECTURE_FAIL,
                },
                Ok(ColoringSearch::Inconclusive { nodes }) => CheckResult {
                    value: json!({ "found": false, "exhausted": false, "nodes": nodes }),
                    text: "inconclusive (node budget exhausted)".into(),
                    compact: "inconclusive".into(),
                    code: EXIT_INCONCLUSIVE,
                },
                Err(e) => check_error(e),
            }
        }
        CheckName::Gallai => match params::check_gallai(g) {
            Ok(r) => CheckResult {
                value: serde_json::to_value(&r).expect("report serializes"),
                text: format!(
                    "{} = {} + {}  {}{}",
                    r.order,
                    r.t_value,
                    r.ell,
                    if r.holds { "pass" } else { "FAIL" },
                    if r.independent_backends {
                        " (independent backends)"
                    } else {
                        ""
                    }
                ),
                compact: if r.holds { "pass".into() } else { "fail".into() },
                code: if r.holds { EXIT_PASS } else { EXIT_THEOREM_FAIL },
            },
            Err(e) => check_error(e),
        },
        CheckName::Bounds => {
            let opts = BoundsOptions {
                expansion_budget: cfg.budget,
                timeout: cfg.timeout,
            };
            match params::check_bounds(g, &opts) {
                Ok(report) => {
                    let code = report.exit_code();
                    let mut text = String::from("\n");
                    for line in report.render_text().lines() {
                        text.push_str("  ");
                        text.push_str(line);
                        text.push('\n');
                    }
                    text.pop();
                    CheckResult {
                        value: json!({
                            "rows": serde_json::to_value(&report.rows).expect("rows serialize"),
                            "exit": code,
                        }),
                        text,
                        compact: match code {
                            EXIT_PASS => "pass".into(),
                            EXIT_THEOREM_FAIL => "theorem-fail".into(),
                            EXIT_CONJECTURE_FAIL => "conjecture-fail".into(),
                            _ => "inconclusive".into(),
                        },
                        code,
                    }
                }
                Err(e) => check_error(e),
            }
        }
    }
}

fn graph_summary(g: &Multigraph) -> Value {
    json!({
        "hash": g.content_hash(),
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "cubic": g.is_cubic(),
        "simple": g.is_simple(),
        "connected": g.is_connected(),
        "bridges": bridge_edges(g).len(),
    })
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

fn cmd_analyze(args: AnalyzeArgs) -> Result<i32> {
    let cfg = SolverConfig::new(args.budget, args.timeout, &args.checks)?;
    let g = load_graph(&args.input, args.format)?;

    let mut results = BTreeMap::new();
    let mut texts = Vec::new();
    let mut code = EXIT_PASS;
    for &check in &cfg.checks {
        let r = run_check(&g, check, &cfg);
        code = params::combine_exit_codes(code, r.code);
        texts.push(format!("{}: {}", check.key(), r.text));
        results.insert(check.key().to_string(), r.value);
    }

    if args.json {
        let doc = json!({
            "graph": graph_summary(&g),
            "solver_config": cfg.as_json(),
            "results": results,
            "exit": code,
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        let bridges = bridge_edges(&g);
        println!(
            "graph {}: {} vertices, {} edges, {}, {}",
            &g.content_hash()[..12],
            g.vertex_count(),
            g.edge_count(),
            if g.is_simple() { "simple" } else { "multigraph" },
            if bridges.is_empty() {
                "bridgeless".to_string()
            } else {
                format!("{} bridge(s)", bridges.len())
            }
        );
        for line in texts {
            println!("{line}");
        }
        println!("exit: {code}");
    }
    Ok(code)
}

// ---------------------------------------------------------------------------
// batch
// ---------------------------------------------------------------------------

#[derive(Clone)]
struct RunRecord {
    graph_id: String,
    source: String,
    status: &'static str,
    error: Option<String>,
    results: BTreeMap<String, Value>,
    compact: Vec<String>,
    wall_ms: u128,
    exit: i32,
}

fn run_record(path: &Path, cfg: &SolverConfig, fmt: Option<FormatArg>) -> RunRecord {
    let started = Instant::now();
    let source = path.display().to_string();
    let g = match load_graph(path, fmt) {
        Ok(g) => g,
        Err(e) => {
            return RunRecord {
                graph_id: String::new(),
                source,
                status: "error",
                error: Some(format!("{e:#}")),
                results: BTreeMap::new(),
                compact: vec!["error".into(); cfg.checks.len()],
                wall_ms: started.elapsed().as_millis(),
                exit: EXIT_INCONCLUSIVE,
            };
        }
    };
    let mut results = BTreeMap::new();
    let mut compact = Vec::new();
    let mut code = EXIT_PASS;
    for &check in &cfg.checks {
        let r = run_check(&g, check, cfg);
        code = params::combine_exit_codes(code, r.code);
        compact.push(r.compact);
        results.insert(check.key().to_string(), r.value);
    }
    RunRecord {
        graph_id: g.content_hash(),
        source,
        status: "ok",
        error: None,
        results,
        compact,
        wall_ms: started.elapsed().as_millis(),
        exit: code,
    }
}

fn csv_escape(cell: &str) -> String {
    if cell.contains(',') || cell.contains('"') || cell.contains('\n') {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

fn collect_inputs(args: &BatchArgs) -> Result<Vec<PathBuf>> {
    if args.list {
        let raw = fs::read_to_string(&args.input)
            .with_context(|| format!("reading list file {}", args.input.display()))?;
        Ok(raw
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(PathBuf::from)
            .collect())
    } else {
        let mut paths: Vec<PathBuf> = fs::read_dir(&args.input)
            .with_context(|| format!("reading directory {}", args.input.display()))?
            .filter_map(|entry| entry.ok())
            .filter(|entry| entry.file_type().map(|t| t.is_file()).unwrap_or(false))
            .map(|entry| entry.path())
            .collect();
        paths.sort();
        Ok(paths)
    }
}

fn cmd_batch(args: BatchArgs) -> Result<i32> {
    let cfg = SolverConfig::new(args.budget, args.timeout, &args.checks)?;
    let paths = collect_inputs(&args)?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()
        .context("building worker pool")?;
    let records: Vec<RunRecord> = pool.install(|| {
        paths
            .par_iter()
            .map(|p| run_record(p, &cfg, args.format))
            .collect()
    });

    let mut out = String::new();
    if !records.is_empty() {
        if args.json {
            for r in &records {
                let doc = json!({
                    "graph_id": r.graph_id,
                    "source": r.source,
                    "status": r.status,
                    "error": r.error,
                    "results": r.results,
                    "wall_ms": r.wall_ms,
                    "solver_config": cfg.as_json(),
                    "exit": r.exit,
                });
                out.push_str(&serde_json::to_string(&doc)?);
                out.push('\n');
            }
        } else {
            let check_cols: Vec<&str> = cfg.checks.iter().map(|c| c.key()).collect();
            out.push_str(&format!(
                "# tricub-batch/1 {} jobs={}\n",
                cfg.as_flag_string(),
                args.jobs
            ));
            out.push_str(&format!(
                "graph_id,source,status,wall_ms,exit,{}\n",
                check_cols.join(",")
            ));
            for r in &records {
                let mut cells = vec![
                    csv_escape(&r.graph_id),
                    csv_escape(&r.source),
                    r.status.to_string(),
                    r.wall_ms.to_string(),
                    r.exit.to_string(),
                ];
                cells.extend(r.compact.iter().map(|c| csv_escape(c)));
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
    }
    write_output(&out, args.out.as_deref())?;

    let code = records
        .iter()
        .fold(EXIT_PASS, |acc, r| params::combine_exit_codes(acc, r.exit));
    Ok(code)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn verify_envelope(g: &Multigraph, hash: &str, env: &Value) -> Result<String> {
    let ty = env
        .get("type")
        .and_then(Value::as_str)
        .context("certificate is missing its \"type\" field")?;
    let host = env
        .get("host_hash")
        .and_then(Value::as_str)
        .context("certificate is missing its \"host_hash\" field")?;
    ensure!(
        host == hash,
        "host hash mismatch: certificate speaks for a different graph"
    );
    let members: Vec<Vec<EdgeId>> = serde_json::from_value(
        env.get("members")
            .cloned()
            .context("certificate is missing its \"members\" field")?,
    )
    .context("malformed members")?;

    match ty {
        "t" | "T" => {
            let value = env
                .get("value")
                .and_then(Value::as_u64)
                .context("parameter certificate is missing \"value\"")? as usize;
            let witness_u: Vec<VertexId> = serde_json::from_value(
                env.get("witness_u")
                    .cloned()
                    .context("parameter certificate is missing \"witness_u\"")?,
            )
            .context("malformed witness_u")?;
            let (kind, witness) = if ty == "t" {
                ensure!(
                    members.len() == 1,
                    "a matching certificate carries exactly one member"
                );
                (
                    ParamKind::MatchingExpansion,
                    ParamWitness::Matching(members.into_iter().next().expect("one member")),
                )
            } else {
                let arr: [Vec<EdgeId>; 4] = members
                    .try_into()
                    .map_err(|_| anyhow!("a cover certificate carries exactly four members"))?;
                (
                    ParamKind::CoverExpansion,
                    ParamWitness::Cover(covers::FourPmCover { matchings: arr }),
                )
            };
            let cert = ParamCertificate {
                kind,
                value,
                witness_u,
                witness,
                exact: env.get("exact").and_then(Value::as_bool).unwrap_or(true),
            };
            params::verify_param_certificate(g, &cert)?;
            Ok(format!("{ty} <= {value} witnessed"))
        }
        "cycle_cover" | "five_cdc" | "four_pm_cover" | "parity_family" => {
            let cert = match ty {
                "cycle_cover" => CoverCertificate::CycleCover { members },
                "five_cdc" => CoverCertificate::FiveCdc { members },
                "four_pm_cover" => CoverCertificate::FourPmCover { members },
                _ => CoverCertificate::ParityFamily { members },
            };
            let report = covers::verify_cover(g, &cert);
            ensure!(
                report.valid,
                "{}",
                report
                    .violation
                    .unwrap_or_else(|| "cover fails verification".into())
            );
            Ok(format!(
                "{} members, length {}",
                report.members, report.length
            ))
        }
        other => bail!("unknown certificate type {other:?}"),
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<i32> {
    let g = load_graph(&args.graph, args.format)?;
    let hash = g.content_hash();
    let raw = fs::read_to_string(&args.certificate)
        .with_context(|| format!("reading {}", args.certificate.display()))?;
    let doc: Value =
        serde_json::from_str(&raw).context("certificate file is not valid JSON")?;

    let mut envelopes: Vec<(String, Value)> = Vec::new();
    if let Some(results) = doc.get("results").and_then(Value::as_object) {
        for (name, entry) in results {
            if let Some(cert) = entry.get("certificate") {
                envelopes.push((name.clone(), cert.clone()));
            }
        }
        ensure!(
            !envelopes.is_empty(),
            "report contains no certificates to replay"
        );
    } else {
        envelopes.push(("certificate".into(), doc));
    }

    let mut all_valid = true;
    for (label, env) in &envelopes {
        match verify_envelope(&g, &hash, env) {
            Ok(desc) => println!("{label}: valid ({desc})"),
            Err(e) => {
                all_valid = false;
                eprintln!("{label}: INVALID: {e:#}");
            }
        }
    }
    Ok(if all_valid { EXIT_PASS } else { EXIT_THEOREM_FAIL })
}
