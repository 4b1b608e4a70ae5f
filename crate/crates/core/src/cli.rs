//! Command-line driver.
//!
//! Each subcommand writes its CSV next to a JSON manifest holding the fully
//! resolved configuration; `replay` re-executes a manifest.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 a run was
//! exhausted before reaching a terminal regime.

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{BufReader, BufWriter};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::consensus::{check_consensus_bounds, run_observed, BoundReport, ConsensusState, RunConfig, Termination, TraceWriter};
use crate::detect::{tau_from_gamma, CyclePolicy, RhoStrategy};
use crate::error::{Error, Result};
use crate::experiments::{
    convergence_time_sweep, monte_carlo, write_csv, CriterionSetup, DeltaChoice, MonteCarloConfig, HypothesisDraw,
    Schedule, TimeSweepConfig, Topology,
};
use crate::graph::Graph;
use crate::models::HypothesisModel;
use crate::quantizer::DeltaQuantizer;

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "ONEBIT_DETECT_OUT";

const EXIT_IO: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_EXHAUSTED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "onebit-detect",
    version,
    about = "Distributed detection with one-bit quantized consensus",
    after_help = "Outputs: every CSV is written together with a JSON manifest of the same stem.\n\
                  Exit codes: 0 ok, 1 I/O error, 2 usage error, 3 some run was exhausted.\n\
                  Default output directory: $ONEBIT_DETECT_OUT, else the working directory."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one consensus instance on explicit data.
    Consensus(ConsensusArgs),
    /// Monte Carlo error rates of a detection criterion over a grid of n.
    ///
    /// CSV columns: n, m, topology, trials, decided, exhausted, h1_trials,
    /// h2_trials, empirical_pe, empirical_alpha, empirical_beta,
    /// centralized_pe, cycle_count, mean_convergence_time,
    /// confidence_halfwidth, bound_violations.
    Detect(DetectArgs),
    /// Mean convergence time per topology and n.
    ///
    /// CSV columns: topology, n, m, schedule, trials, converged, cycled,
    /// exhausted, mean_convergence_time, warmup_iterations.
    SweepTime(SweepTimeArgs),
    /// Re-execute a manifest written by `detect`, `sweep-time` or `consensus`.
    Replay(ReplayArgs),
}

#[derive(Debug, Args)]
struct ConsensusArgs {
    /// star:N, path:N, complete:N, random:N:M or file:PATH (edge list).
    #[arg(long)]
    graph: String,
    /// Comma-separated values, or a file of whitespace-separated values.
    #[arg(long)]
    data: String,
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    #[arg(long)]
    big_delta: f64,
    #[arg(long)]
    delta: f64,
    #[arg(long)]
    rho: f64,
    /// Seed for random graphs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Per-iteration trace CSV with columns k,i,x,alpha,q.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Skip the consensus error bound report.
    #[arg(long)]
    no_bounds: bool,
    #[command(flatten)]
    stop: StopArgs,
}

#[derive(Debug, Args, Clone, Copy)]
struct StopArgs {
    #[arg(long, default_value_t = 1_000_000)]
    max_iter: u64,
    #[arg(long, default_value_t = 256)]
    cycle_window: usize,
}

impl StopArgs {
    fn config(&self) -> RunConfig {
        RunConfig { max_iter: self.max_iter, cycle_window: self.cycle_window }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CriterionArg {
    NpConst,
    Map,
    NpExp,
    FiniteN,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PolicyArg {
    AcceptH1,
    RejectH1,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScheduleArg {
    Fixed,
    Decreasing,
}

#[derive(Debug, Args)]
struct DetectArgs {
    #[arg(long, value_enum)]
    criterion: CriterionArg,
    /// gauss:MU1,MU2,VAR or table:PATH (rows `symbol p1 p2`).
    #[arg(long, default_value = "gauss:1,-1,10", allow_hyphen_values = true)]
    model: String,
    /// star, path, complete, random:P or random:m=K.
    #[arg(long, default_value = "star")]
    graph: String,
    /// start:stop:step, a comma-separated list, or a single value.
    #[arg(long)]
    n: String,
    #[arg(long, default_value_t = 10_000)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// np-const offset: a number or `hoeffding`.
    #[arg(long)]
    delta: Option<String>,
    /// Prior of H1 (map).
    #[arg(long, default_value_t = 0.5)]
    pi1: f64,
    #[arg(long)]
    prior_adjusted: bool,
    /// np-exp threshold parameter.
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<f64>,
    /// np-exp type-I exponent; solved for τ.
    #[arg(long)]
    gamma: Option<f64>,
    /// finite-n threshold.
    #[arg(long, allow_hyphen_values = true)]
    tau_star: Option<f64>,
    /// finite-n step size.
    #[arg(long)]
    rho: Option<f64>,
    /// Run with ρ = 1/(4m) first and rerun with the criterion's ρ on a cycle.
    #[arg(long)]
    two_stage: bool,
    #[arg(long, value_enum, default_value = "accept-h1")]
    cycle_policy: PolicyArg,
    #[command(flatten)]
    stop: StopArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct SweepTimeArgs {
    /// Comma-separated topologies.
    #[arg(long, default_value = "star,complete,random:0.3")]
    topologies: String,
    #[arg(long)]
    n: String,
    #[arg(long, default_value_t = 2000)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "fixed")]
    schedule: ScheduleArg,
    #[arg(long, default_value = "gauss:1,-1,10", allow_hyphen_values = true)]
    model: String,
    #[arg(long, default_value_t = 0.5)]
    pi1: f64,
    #[command(flatten)]
    stop: StopArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// File stem of the CSV and manifest.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Debug, Args)]
struct ReplayArgs {
    manifest: PathBuf,
    /// Write the CSV here instead of the recorded path.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Compare against the recorded CSV instead of writing; exit 1 on mismatch.
    #[arg(long)]
    verify: bool,
}

/// Fully resolved configuration of one invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool_version: String,
    pub csv: PathBuf,
    pub params: ManifestParams,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
pub enum ManifestParams {
    Consensus(ConsensusParams),
    Detect(DetectParams),
    SweepTime(SweepTimeParams),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConsensusParams {
    pub graph: String,
    /// Edge list of the graph actually used.
    pub edges: Vec<(usize, usize)>,
    pub n: usize,
    pub data: Vec<f64>,
    pub quantizer: DeltaQuantizer,
    pub rho: f64,
    pub seed: u64,
    pub run_config: RunConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DetectParams {
    pub model: HypothesisModel,
    pub topology: Topology,
    pub n_values: Vec<usize>,
    pub criterion: CriterionSetup,
    /// Type-I exponent the threshold was solved from, if given.
    pub gamma: Option<f64>,
    pub cycle_policy: CyclePolicy,
    pub strategy: RhoStrategy,
    pub trials: usize,
    pub seed: u64,
    pub run_config: RunConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTimeParams {
    pub model: HypothesisModel,
    pub pi1: f64,
    pub topologies: Vec<Topology>,
    pub n_values: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub schedule: Schedule,
    pub run_config: RunConfig,
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Consensus(a) => cmd_consensus(a),
        Command::Detect(a) => cmd_detect(a),
        Command::SweepTime(a) => cmd_sweep_time(a),
        Command::Replay(a) => cmd_replay(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) | Error::Csv(_) | Error::Json(_) => EXIT_IO,
                _ => EXIT_USAGE,
            }
        }
    }
}

/// Parses `start:stop:step` (inclusive), `a,b,c`, or a single integer.
pub fn parse_n_values(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidParameter(format!("cannot parse n values from `{s}`"));
    let s = s.trim();
    if s.is_empty() {
        return Err(bad());
    }
    let values: Vec<usize> = if s.contains(':') {
        let parts: Vec<usize> = s.split(':').map(|p| p.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?;
        match parts[..] {
            [start, stop, step] if step > 0 && start <= stop => (start..=stop).step_by(step).collect(),
            _ => return Err(bad()),
        }
    } else {
        s.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
    };
    if values.iter().any(|&n| n < 2) {
        return Err(Error::InvalidParameter(format!("every n must be at least 2 in `{s}`")));
    }
    Ok(values)
}

/// Parses `gauss:MU1,MU2,VAR` or `table:PATH`.
pub fn parse_model(s: &str) -> Result<HypothesisModel> {
    if let Some(rest) = s.strip_prefix("gauss:") {
        let v: Vec<f64> = rest
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| Error::InvalidParameter(format!("bad model `{s}`"))))
            .collect::<Result<_>>()?;
        match v[..] {
            [mu1, mu2, var] => HypothesisModel::gaussian(mu1, mu2, var),
            _ => Err(Error::InvalidParameter(format!("gauss needs MU1,MU2,VAR, got `{s}`"))),
        }
    } else if let Some(path) = s.strip_prefix("table:") {
        HypothesisModel::read_probability_table(BufReader::new(open(path)?))
    } else {
        Err(Error::InvalidParameter(format!("unknown model `{s}`")))
    }
}

fn open(path: impl AsRef<Path>) -> Result<File> {
    let path = path.as_ref();
    File::open(path).map_err(|e| Error::InvalidParameter(format!("cannot open {}: {e}", path.display())))
}

/// Parses `star:N`, `path:N`, `complete:N`, `random:N:M` or `file:PATH`.
pub fn parse_graph(s: &str, seed: u64) -> Result<Graph> {
    let bad = || Error::InvalidParameter(format!("cannot parse graph `{s}`"));
    if let Some(path) = s.strip_prefix("file:") {
        return Graph::read_edge_list(BufReader::new(open(path)?));
    }
    let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
    let nums: Vec<usize> = rest.split(':').map(|p| p.parse().map_err(|_| bad())).collect::<Result<_>>()?;
    match (kind, &nums[..]) {
        ("star", [n]) => Graph::star(*n),
        ("path", [n]) => Graph::path(*n),
        ("complete", [n]) => Graph::complete(*n),
        ("random", [n, m]) => Graph::random_connected(*n, *m, &mut ChaCha8Rng::seed_from_u64(seed)),
        _ => Err(bad()),
    }
}

/// Comma-separated numbers inline, otherwise a file of whitespace-separated
/// numbers with `#` comments.
pub fn parse_data(s: &str) -> Result<Vec<f64>> {
    let inline: std::result::Result<Vec<f64>, _> = s.split(',').map(|p| p.trim().parse::<f64>()).collect();
    if let Ok(v) = inline {
        return Ok(v);
    }
    let text = fs::read_to_string(s).map_err(|e| Error::InvalidParameter(format!("cannot read data `{s}`: {e}")))?;
    let mut values = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        for tok in line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            values.push(tok.parse().map_err(|_| Error::Parse { line: idx + 1, msg: format!("not a number: `{tok}`") })?);
        }
    }
    Ok(values)
}

fn parse_list<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<Vec<T>> {
    let v: Vec<T> = s.split(',').filter(|p| !p.trim().is_empty()).map(|p| p.trim().parse()).collect::<Result<_>>()?;
    if v.is_empty() {
        return Err(Error::InvalidParameter("empty list".into()));
    }
    Ok(v)
}

fn output_paths(out: &OutputArgs, default_name: &str) -> Result<(PathBuf, PathBuf)> {
    let dir = out
        .out
        .clone()
        .or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&dir)?;
    let stem = out.name.as_deref().unwrap_or(default_name);
    Ok((dir.join(format!("{stem}.csv")), dir.join(format!("{stem}.json"))))
}

fn write_manifest(path: &Path, manifest: &RunManifest) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut w, manifest)?;
    Ok(())
}

fn manifest(csv: PathBuf, params: ManifestParams) -> RunManifest {
    RunManifest { tool_version: env!("CARGO_PKG_VERSION").to_string(), csv, params }
}

fn cmd_consensus(a: ConsensusArgs) -> Result<i32> {
    let graph = parse_graph(&a.graph, a.seed)?;
    let data = parse_data(&a.data)?;
    let params = ConsensusParams {
        graph: a.graph,
        edges: graph.edges().to_vec(),
        n: graph.node_count(),
        data,
        quantizer: DeltaQuantizer::new(a.a, a.big_delta, a.delta)?,
        rho: a.rho,
        seed: a.seed,
        run_config: a.stop.config(),
    };
    let code = execute_consensus(&params, a.trace.as_deref(), !a.no_bounds)?;
    if let Some(trace) = a.trace {
        write_manifest(&trace.with_extension("json"), &manifest(trace, ManifestParams::Consensus(params)))?;
    }
    Ok(code)
}

fn execute_consensus(p: &ConsensusParams, trace: Option<&Path>, bounds: bool) -> Result<i32> {
    let graph = Graph::from_edges(p.n, p.edges.iter().copied())?;
    if let Some(dir) = trace.and_then(Path::parent).filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    let state = ConsensusState::new(&graph, &p.data, p.quantizer, p.rho)?;
    let mut writer = trace.map(|t| File::create(t).map(BufWriter::new)).transpose()?.map(TraceWriter::new).transpose()?;
    let mut trace_err = None;
    let outcome = run_observed(state, &graph, &p.run_config, |s| {
        if let Some(w) = writer.as_mut() {
            if let Err(e) = w.record(s) {
                trace_err.get_or_insert(e);
            }
        }
    })?;
    if let Some(e) = trace_err {
        return Err(e);
    }
    if let Some(w) = writer {
        w.finish()?;
    }
    let state = &outcome.final_state;
    match &outcome.termination {
        Termination::Converged { level } => println!(
            "outcome=converged iterations={} level={level:?} value={} data_mean={}",
            outcome.iterations,
            state.quantizer().value(*level),
            state.data_mean()
        ),
        Termination::Cycled(c) => println!(
            "outcome=cycled iterations={} period={} entered_at={} data_mean={}",
            outcome.iterations,
            c.period,
            c.entered_at,
            state.data_mean()
        ),
        Termination::Exhausted => {
            println!("outcome=exhausted iterations={} data_mean={}", outcome.iterations, state.data_mean());
            return Ok(EXIT_EXHAUSTED);
        }
    }
    if bounds {
        match check_consensus_bounds(&outcome, &graph)? {
            BoundReport::Converged { bound, .. } => println!(
                "bound: |x_Q - T(r_mean)| = {} {} {} -> {}",
                bound.error,
                if bound.strict { "<" } else { "<=" },
                bound.bound,
                if bound.holds() { "ok" } else { "VIOLATED" }
            ),
            BoundReport::Cycled { bound, .. } => {
                println!(
                    "bound: |r_mean - threshold| = {} < {} -> {}",
                    bound.mean_gap,
                    bound.mean_gap_bound,
                    if bound.mean_gap < bound.mean_gap_bound { "ok" } else { "VIOLATED" }
                );
                println!("bound: per-period upper counts equal = {}", bound.sums_equal());
                println!(
                    "bound: max |x - threshold| = {} < {} -> {}",
                    bound.proximity,
                    bound.proximity_bound,
                    if bound.proximity < bound.proximity_bound { "ok" } else { "VIOLATED" }
                );
            }
        }
    }
    Ok(0)
}

fn cmd_detect(a: DetectArgs) -> Result<i32> {
    let model = parse_model(&a.model)?;
    let topology: Topology = a.graph.parse()?;
    let n_values = parse_n_values(&a.n)?;
    let mut gamma = None;
    let criterion = match a.criterion {
        CriterionArg::NpConst => {
            let d = a.delta.as_deref().ok_or_else(|| Error::InvalidParameter("np-const needs --delta".into()))?;
            let delta = if d == "hoeffding" {
                DeltaChoice::Hoeffding
            } else {
                DeltaChoice::Fixed(d.parse().map_err(|_| Error::InvalidParameter(format!("bad --delta `{d}`")))?)
            };
            CriterionSetup::NpConstant { delta }
        }
        CriterionArg::Map => CriterionSetup::Map { pi1: a.pi1, prior_adjusted: a.prior_adjusted },
        CriterionArg::NpExp => {
            let tau = match (a.tau, a.gamma) {
                (Some(t), None) => t,
                (None, Some(g)) => {
                    gamma = Some(g);
                    tau_from_gamma(&model, g)?
                }
                _ => return Err(Error::InvalidParameter("np-exp needs exactly one of --tau, --gamma".into())),
            };
            CriterionSetup::NpExponential { tau }
        }
        CriterionArg::FiniteN => CriterionSetup::FiniteN {
            tau_star: a.tau_star.ok_or_else(|| Error::InvalidParameter("finite-n needs --tau-star".into()))?,
            rho: a.rho.ok_or_else(|| Error::InvalidParameter("finite-n needs --rho".into()))?,
        },
    };
    let params = DetectParams {
        model,
        topology,
        n_values,
        criterion,
        gamma,
        cycle_policy: match a.cycle_policy {
            PolicyArg::AcceptH1 => CyclePolicy::AcceptH1,
            PolicyArg::RejectH1 => CyclePolicy::RejectH1,
        },
        strategy: if a.two_stage { RhoStrategy::TwoStage } else { RhoStrategy::Strict },
        trials: a.trials,
        seed: a.seed,
        run_config: a.stop.config(),
    };
    let (csv, json) = output_paths(&a.output, "detect")?;
    let code = execute_detect(&params, &csv)?;
    write_manifest(&json, &manifest(csv, ManifestParams::Detect(params)))?;
    Ok(code)
}

fn execute_detect(p: &DetectParams, csv: &Path) -> Result<i32> {
    if let CriterionSetup::NpExponential { tau } = p.criterion {
        println!("tau = {tau}");
    }
    let mut rows = Vec::new();
    for &n in &p.n_values {
        let cfg = MonteCarloConfig {
            model: p.model.clone(),
            topology: p.topology,
            n,
            criterion: p.criterion,
            cycle_policy: p.cycle_policy,
            strategy: p.strategy,
            hypotheses: HypothesisDraw::for_criterion(&p.criterion),
            trials: p.trials,
            seed: p.seed,
            run_config: p.run_config,
            check_bounds: false,
        };
        let r = monte_carlo(&cfg)?;
        println!(
            "n={} pe={:.6} alpha={:.6} beta={:.6} centralized={} cycles={} exhausted={}",
            r.n,
            r.empirical_pe,
            r.empirical_alpha,
            r.empirical_beta,
            r.centralized_pe.map_or("-".to_string(), |v| format!("{v:.6}")),
            r.cycle_count,
            r.exhausted
        );
        rows.push(r);
    }
    write_csv(&rows, BufWriter::new(File::create(csv)?))?;
    println!("wrote {}", csv.display());
    Ok(if rows.iter().any(|r| r.exhausted > 0) { EXIT_EXHAUSTED } else { 0 })
}

fn cmd_sweep_time(a: SweepTimeArgs) -> Result<i32> {
    let params = SweepTimeParams {
        model: parse_model(&a.model)?,
        pi1: a.pi1,
        topologies: parse_list(&a.topologies)?,
        n_values: parse_n_values(&a.n)?,
        trials: a.trials,
        seed: a.seed,
        schedule: match a.schedule {
            ScheduleArg::Fixed => Schedule::Fixed,
            ScheduleArg::Decreasing => Schedule::Decreasing,
        },
        run_config: a.stop.config(),
    };
    let (csv, json) = output_paths(&a.output, "sweep-time")?;
    let code = execute_sweep_time(&params, &csv)?;
    write_manifest(&json, &manifest(csv, ManifestParams::SweepTime(params)))?;
    Ok(code)
}

fn execute_sweep_time(p: &SweepTimeParams, csv: &Path) -> Result<i32> {
    if !(p.pi1 > 0.0 && p.pi1 < 1.0) {
        return Err(Error::InvalidParameter(format!("--pi1 must lie in (0, 1), got {}", p.pi1)));
    }
    let rows = convergence_time_sweep(&TimeSweepConfig {
        model: p.model.clone(),
        pi1: p.pi1,
        topologies: p.topologies.clone(),
        n_values: p.n_values.clone(),
        trials: p.trials,
        seed: p.seed,
        schedule: p.schedule,
        run_config: p.run_config,
    })?;
    for r in &rows {
        println!(
            "{} n={} m={} mean_time={:.2} converged={} cycled={} exhausted={}",
            r.topology, r.n, r.m, r.mean_convergence_time, r.converged, r.cycled, r.exhausted
        );
    }
    write_csv(&rows, BufWriter::new(File::create(csv)?))?;
    println!("wrote {}", csv.display());
    Ok(if rows.iter().any(|r| r.exhausted > 0) { EXIT_EXHAUSTED } else { 0 })
}

fn cmd_replay(a: ReplayArgs) -> Result<i32> {
    let m: RunManifest = serde_json::from_reader(BufReader::new(open(&a.manifest)?))?;
    let target = if a.verify {
        let tmp = m.csv.with_extension("replay.csv");
        a.csv.clone().unwrap_or(tmp)
    } else {
        a.csv.clone().unwrap_or_else(|| m.csv.clone())
    };
    let code = match &m.params {
        ManifestParams::Consensus(p) => execute_consensus(p, Some(&target), true)?,
        ManifestParams::Detect(p) => execute_detect(p, &target)?,
        ManifestParams::SweepTime(p) => execute_sweep_time(p, &target)?,
    };
    if a.verify {
        let same = fs::read(&m.csv)? == fs::read(&target)?;
        if a.csv.is_none() {
            fs::remove_file(&target)?;
        }
        println!("replay {}", if same { "matches" } else { "DIFFERS" });
        if !same {
            return Ok(EXIT_IO);
        }
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_value_syntax() {
        assert_eq!(parse_n_values("10:100:10").unwrap(), (1..=10).map(|k| 10 * k).collect::<Vec<_>>());
        assert_eq!(parse_n_values("10,40,100").unwrap(), vec![10, 40, 100]);
        assert_eq!(parse_n_values("7").unwrap(), vec![7]);
        for bad in ["", "10:5:1", "10:20:0", "a,b", "1", "3:4"] {
            assert!(parse_n_values(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn model_syntax() {
        assert_eq!(parse_model("gauss:1,-1,10").unwrap(), HypothesisModel::gaussian(1.0, -1.0, 10.0).unwrap());
        assert!(parse_model("gauss:1,-1").is_err());
        assert!(parse_model("laplace:1").is_err());
    }

    #[test]
    fn graph_syntax() {
        assert_eq!(parse_graph("star:10", 0).unwrap(), Graph::star(10).unwrap());
        assert_eq!(parse_graph("random:8:12", 4).unwrap().edge_count(), 12);
        assert_eq!(parse_graph("random:8:12", 4).unwrap(), parse_graph("random:8:12", 4).unwrap());
        assert!(parse_graph("star", 0).is_err());
        assert!(parse_graph("wheel:5", 0).is_err());
    }

    #[test]
    fn inline_data() {
        assert_eq!(parse_data("1, -2.5,3").unwrap(), vec![1.0, -2.5, 3.0]);
    }

    #[test]
    fn manifest_round_trip() {
        let p = DetectParams {
            model: HypothesisModel::discrete(vec![0.7, 0.2, 0.1], vec![0.1, 0.3, 0.6]).unwrap(),
            topology: Topology::RandomDensity(0.3),
            n_values: vec![10, 20],
            criterion: CriterionSetup::NpExponential { tau: 0.1 / 3.0 },
            gamma: Some(0.02),
            cycle_policy: CyclePolicy::RejectH1,
            strategy: RhoStrategy::TwoStage,
            trials: 5,
            seed: 99,
            run_config: RunConfig::default(),
        };
        let m = manifest(PathBuf::from("out/detect.csv"), ManifestParams::Detect(p));
        let text = serde_json::to_string(&m).unwrap();
        let back: RunManifest = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
    }
}
