//! Monte Carlo harness: error probabilities against the centralized
//! optimum, cycle counts, and convergence-time sweeps.
//!
//! Every trial draws from its own generator, seeded by the root seed and
//! switched to a stream equal to the trial index, so results do not depend
//! on scheduling or thread count.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use libm::erfc;

use crate::consensus::{check_consensus_bounds, run, run_from, ConsensusOutcome, ConsensusState, RunConfig};
use crate::detect::{
    execute, finite_n_config, hoeffding_delta, map_config, multi_map, np_constant_config,
    np_exponential_config, CyclePolicy, DetectorConfig, RhoStrategy,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::models::{Density, Hypothesis, HypothesisModel, ModelKind, Observation};
use crate::quantizer::DeltaQuantizer;

/// Standard normal upper tail `P(Z > x)`.
pub fn qfunc(x: f64) -> f64 {
    0.5 * erfc(x / std::f64::consts::SQRT_2)
}

/// Optimal centralized error probability for `N(1, 10)` versus `N(−1, 10)`
/// with `n` samples and prior `pi1` on the first hypothesis.
pub fn centralized_gaussian_pe(n: usize, pi1: f64) -> f64 {
    let pi2 = 1.0 - pi1;
    let nf = n as f64;
    let shift = 5.0 / nf * (pi2 / pi1).ln();
    let scale = (nf / 10.0).sqrt();
    pi1 * qfunc((1.0 - shift) * scale) + pi2 * qfunc((1.0 + shift) * scale)
}

/// Optimal centralized error probability for any Gaussian pair with a common
/// variance. `None` for other models.
pub fn centralized_map_pe(model: &HypothesisModel, n: usize, pi1: f64) -> Option<f64> {
    let (d, v) = model.gaussian_llr_moments(Hypothesis::H1)?;
    let nf = n as f64;
    let t = ((1.0 - pi1) / pi1).ln();
    let sd = (nf * v).sqrt();
    // The summed LLR is N(nD, nv) under H1 and N(−nD, nv) under H2.
    Some(pi1 * (1.0 - qfunc((t - nf * d) / sd)) + (1.0 - pi1) * qfunc((t + nf * d) / sd))
}

/// Network family used for each trial.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Topology {
    Star,
    Path,
    Complete,
    /// Random connected graph with exactly this many edges.
    RandomEdges(usize),
    /// Random connected graph keeping this fraction of all possible edges
    /// (at least `n − 1`).
    RandomDensity(f64),
}

impl Topology {
    pub fn edge_count(&self, n: usize) -> usize {
        let full = n * (n - 1) / 2;
        match *self {
            Self::Star | Self::Path => n - 1,
            Self::Complete => full,
            Self::RandomEdges(m) => m,
            Self::RandomDensity(p) => ((p * full as f64).round() as usize).clamp(n - 1, full),
        }
    }

    pub fn is_random(&self) -> bool {
        matches!(self, Self::RandomEdges(_) | Self::RandomDensity(_))
    }

    pub fn build<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Result<Graph> {
        match *self {
            Self::Star => Graph::star(n),
            Self::Path => Graph::path(n),
            Self::Complete => Graph::complete(n),
            Self::RandomEdges(_) | Self::RandomDensity(_) => Graph::random_connected(n, self.edge_count(n), rng),
        }
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Star => write!(f, "star"),
            Self::Path => write!(f, "path"),
            Self::Complete => write!(f, "complete"),
            Self::RandomEdges(m) => write!(f, "random:m={m}"),
            Self::RandomDensity(p) => write!(f, "random:{p}"),
        }
    }
}

impl FromStr for Topology {
    type Err = Error;

    /// Accepts `star`, `path`, `complete`, `random:P` and `random:m=K`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unknown topology `{s}`"));
        match s {
            "star" => Ok(Self::Star),
            "path" => Ok(Self::Path),
            "complete" => Ok(Self::Complete),
            _ => {
                let rest = s.strip_prefix("random:").ok_or_else(bad)?;
                if let Some(m) = rest.strip_prefix("m=") {
                    Ok(Self::RandomEdges(m.parse().map_err(|_| bad())?))
                } else {
                    let p: f64 = rest.parse().map_err(|_| bad())?;
                    if !(0.0..=1.0).contains(&p) {
                        return Err(bad());
                    }
                    Ok(Self::RandomDensity(p))
                }
            }
        }
    }
}

/// Offset used by the constant-constraint Neyman–Pearson test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum DeltaChoice {
    Fixed(f64),
    /// `|Σ|·ln(n)/n`; finite alphabets only.
    Hoeffding,
}

/// A detection criterion independent of the network size.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum CriterionSetup {
    NpConstant { delta: DeltaChoice },
    Map { pi1: f64, prior_adjusted: bool },
    NpExponential { tau: f64 },
    FiniteN { tau_star: f64, rho: f64 },
}

impl CriterionSetup {
    pub fn configure(&self, model: &HypothesisModel, n: usize, m: usize) -> Result<DetectorConfig> {
        match *self {
            Self::NpConstant { delta } => {
                let d = match delta {
                    DeltaChoice::Fixed(d) => d,
                    DeltaChoice::Hoeffding => {
                        let k = model.alphabet_size().ok_or_else(|| {
                            Error::InvalidParameter("the Hoeffding offset needs a finite alphabet".into())
                        })?;
                        hoeffding_delta(k, n, model.kl12())?
                    }
                };
                np_constant_config(model, n, m, d)
            }
            Self::Map { pi1, prior_adjusted } => map_config(n, m, pi1, 1.0 - pi1, prior_adjusted),
            Self::NpExponential { tau } => np_exponential_config(model, n, m, tau),
            Self::FiniteN { tau_star, rho } => finite_n_config(tau_star, n, m, rho),
        }
    }
}

/// How the true hypothesis of each trial is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum HypothesisDraw {
    /// `H1` with this probability.
    Prior(f64),
    Always(Hypothesis),
}

impl HypothesisDraw {
    /// Priors of a MAP criterion, otherwise equal odds.
    pub fn for_criterion(setup: &CriterionSetup) -> Self {
        match setup {
            CriterionSetup::Map { pi1, .. } => Self::Prior(*pi1),
            _ => Self::Prior(0.5),
        }
    }

    fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> Hypothesis {
        match *self {
            Self::Prior(p) => {
                if rng.random::<f64>() < p {
                    Hypothesis::H1
                } else {
                    Hypothesis::H2
                }
            }
            Self::Always(h) => h,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloConfig {
    pub model: HypothesisModel,
    pub topology: Topology,
    pub n: usize,
    pub criterion: CriterionSetup,
    pub cycle_policy: CyclePolicy,
    pub strategy: RhoStrategy,
    pub hypotheses: HypothesisDraw,
    pub trials: usize,
    pub seed: u64,
    pub run_config: RunConfig,
    /// Check the consensus error bounds on every terminal outcome.
    pub check_bounds: bool,
}

impl MonteCarloConfig {
    /// Two-stage step size, default cycle policy and hypothesis draw.
    pub fn new(model: HypothesisModel, topology: Topology, n: usize, criterion: CriterionSetup, trials: usize, seed: u64) -> Self {
        Self {
            model,
            topology,
            n,
            hypotheses: HypothesisDraw::for_criterion(&criterion),
            criterion,
            cycle_policy: CyclePolicy::default(),
            strategy: RhoStrategy::TwoStage,
            trials,
            seed,
            run_config: RunConfig::default(),
            check_bounds: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Terminal {
    Converged,
    Cycled,
    Exhausted,
}

impl Terminal {
    fn of(outcome: &ConsensusOutcome) -> Self {
        if outcome.is_converged() {
            Self::Converged
        } else if outcome.is_cycled() {
            Self::Cycled
        } else {
            Self::Exhausted
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial_id: usize,
    pub true_hypothesis: Hypothesis,
    pub outcome_kind: Terminal,
    /// `None` when the run was exhausted.
    pub decision: Option<Hypothesis>,
    /// Iterations over every run of the trial.
    pub iterations_to_terminal: u64,
    pub rho_used: f64,
    pub cycled_first_pass: bool,
    pub consensus_runs: usize,
    /// Mean of the local LLRs.
    pub llr_mean: f64,
    /// `Some(false)` flags a violated consensus bound; `None` if unchecked.
    pub bounds_hold: Option<bool>,
}

/// Aggregate of one Monte Carlo sweep point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub n: usize,
    pub m: usize,
    pub topology: String,
    pub trials: usize,
    /// Trials that reached a decision; the denominator of every rate.
    pub decided: usize,
    pub exhausted: usize,
    pub h1_trials: usize,
    pub h2_trials: usize,
    pub empirical_pe: f64,
    pub empirical_alpha: f64,
    pub empirical_beta: f64,
    pub centralized_pe: Option<f64>,
    /// First-pass cycles.
    pub cycle_count: usize,
    pub mean_convergence_time: f64,
    /// 95% binomial half-width of `empirical_pe`.
    pub confidence_halfwidth: f64,
    pub bound_violations: usize,
}

impl SweepResult {
    /// Aggregates trial records.
    pub fn from_records(cfg: &MonteCarloConfig, m: usize, records: &[TrialRecord]) -> Self {
        let decided: Vec<&TrialRecord> = records.iter().filter(|r| r.decision.is_some()).collect();
        let count = |h: Hypothesis| decided.iter().filter(|r| r.true_hypothesis == h).count();
        let wrong = |h: Hypothesis| decided.iter().filter(|r| r.true_hypothesis == h && r.decision != Some(h)).count();
        let ratio = |a: usize, b: usize| if b == 0 { 0.0 } else { a as f64 / b as f64 };
        let (h1, h2) = (count(Hypothesis::H1), count(Hypothesis::H2));
        let (e1, e2) = (wrong(Hypothesis::H1), wrong(Hypothesis::H2));
        let pe = ratio(e1 + e2, decided.len());
        let mean_time = if decided.is_empty() {
            0.0
        } else {
            decided.iter().map(|r| r.iterations_to_terminal as f64).sum::<f64>() / decided.len() as f64
        };
        let centralized_pe = match (cfg.criterion, cfg.hypotheses) {
            (CriterionSetup::Map { pi1, .. }, HypothesisDraw::Prior(_)) => centralized_map_pe(&cfg.model, cfg.n, pi1),
            _ => None,
        };
        Self {
            n: cfg.n,
            m,
            topology: cfg.topology.to_string(),
            trials: records.len(),
            decided: decided.len(),
            exhausted: records.len() - decided.len(),
            h1_trials: h1,
            h2_trials: h2,
            empirical_pe: pe,
            empirical_alpha: ratio(e1, h1),
            empirical_beta: ratio(e2, h2),
            centralized_pe,
            cycle_count: records.iter().filter(|r| r.cycled_first_pass).count(),
            mean_convergence_time: mean_time,
            confidence_halfwidth: if decided.is_empty() {
                0.0
            } else {
                1.96 * (pe * (1.0 - pe) / decided.len() as f64).sqrt()
            },
            bound_violations: records.iter().filter(|r| r.bounds_hold == Some(false)).count(),
        }
    }
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

fn local_llrs(model: &HypothesisModel, obs: &[Observation]) -> Result<Vec<f64>> {
    obs.iter().map(|&o| model.llr(o)).collect()
}

/// Runs one trial of a sweep.
pub fn run_trial(cfg: &MonteCarloConfig, detector: &DetectorConfig, trial: usize) -> Result<TrialRecord> {
    let mut rng = trial_rng(cfg.seed, trial);
    let truth = cfg.hypotheses.draw(&mut rng);
    let graph = cfg.topology.build(cfg.n, &mut rng)?;
    let obs = cfg.model.sample(truth, cfg.n, &mut rng)?;
    let data = local_llrs(&cfg.model, &obs)?;
    let exec = execute(&graph, &data, detector, cfg.strategy, &cfg.run_config)?;
    let decision = crate::detect::decide(&exec.outcome, detector).ok();
    let bounds_hold = if cfg.check_bounds && decision.is_some() {
        Some(check_consensus_bounds(&exec.outcome, &graph)?.holds())
    } else {
        None
    };
    Ok(TrialRecord {
        trial_id: trial,
        true_hypothesis: truth,
        outcome_kind: Terminal::of(&exec.outcome),
        decision: decision.map(|d| d.accepted),
        iterations_to_terminal: exec.total_iterations,
        rho_used: exec.rho_used,
        cycled_first_pass: exec.first_pass_cycled,
        consensus_runs: exec.consensus_runs,
        llr_mean: exec.outcome.final_state.data_mean(),
        bounds_hold,
    })
}

/// Runs every trial of `cfg`, returning the aggregate and the per-trial
/// records in trial order.
pub fn monte_carlo_records(cfg: &MonteCarloConfig) -> Result<(SweepResult, Vec<TrialRecord>)> {
    if cfg.trials < 1 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let m = cfg.topology.edge_count(cfg.n);
    let detector = cfg.criterion.configure(&cfg.model, cfg.n, m)?.with_cycle_policy(cfg.cycle_policy);
    let records = (0..cfg.trials)
        .into_par_iter()
        .map(|t| run_trial(cfg, &detector, t))
        .collect::<Result<Vec<_>>>()?;
    Ok((SweepResult::from_records(cfg, m, &records), records))
}

pub fn monte_carlo(cfg: &MonteCarloConfig) -> Result<SweepResult> {
    monte_carlo_records(cfg).map(|(r, _)| r)
}

/// Step-size schedule for convergence-time sweeps.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Schedule {
    /// `ρ = 1/(4m)` throughout.
    #[default]
    Fixed,
    /// Start at `n/m`, divide by 10 every 50 iterations while above `1/(4m)`.
    Decreasing,
}

impl FromStr for Schedule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fixed" => Ok(Self::Fixed),
            "decreasing" => Ok(Self::Decreasing),
            _ => Err(Error::InvalidParameter(format!("unknown schedule `{s}`"))),
        }
    }
}

/// Result of [`decreasing_rho_run`].
#[derive(Debug, Clone)]
pub struct ScheduledOutcome {
    /// Outcome of the final stage; its state carries the whole history.
    pub outcome: ConsensusOutcome,
    /// `(ρ, iterations)` for every stage, the final one last.
    pub stages: Vec<(f64, u64)>,
    /// Iterations spent before the final stage.
    pub warmup_iterations: u64,
}

impl ScheduledOutcome {
    pub fn total_iterations(&self) -> u64 {
        self.warmup_iterations + self.outcome.iterations
    }
}

/// Iterations per warm-up stage of the decreasing schedule.
pub const WARMUP_STAGE: u64 = 50;

/// Runs 50 iterations at each of `ρ = n/m, n/(10m), …` while `ρ > 1/(4m)`,
/// then continues from the reached state at the first `ρ ≤ 1/(4m)` until a
/// terminal regime.
pub fn decreasing_rho_run(
    graph: &Graph,
    data: &[f64],
    quantizer: DeltaQuantizer,
    run_config: &RunConfig,
) -> Result<ScheduledOutcome> {
    let (n, m) = (graph.node_count(), graph.edge_count());
    // ρ_k = n/(m·10^k) exceeds 1/(4m) exactly when 4n > 10^k; testing this
    // in integers avoids rounding at powers of ten.
    let rho_at = |k: u32| n as f64 / (m as f64 * 10f64.powi(k as i32));
    let mut k = 0u32;
    let mut state = ConsensusState::new(graph, data, quantizer, rho_at(0))?;
    let mut stages = Vec::new();
    while (4 * n as u128) > 10u128.pow(k) {
        state.set_rho(rho_at(k))?;
        for _ in 0..WARMUP_STAGE {
            state.step(graph);
        }
        stages.push((rho_at(k), WARMUP_STAGE));
        k += 1;
    }
    let warmup = state.iteration();
    state.set_rho(rho_at(k))?;
    let outcome = run_from(state, graph, run_config)?;
    stages.push((rho_at(k), outcome.iterations));
    Ok(ScheduledOutcome { outcome, stages, warmup_iterations: warmup })
}

/// `50·⌈log₁₀(4n)⌉`, computed in integers.
pub fn expected_warmup(n: usize) -> u64 {
    let mut k = 0;
    while (4 * n as u128) > 10u128.pow(k) {
        k += 1;
    }
    WARMUP_STAGE * k as u64
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSweepConfig {
    pub model: HypothesisModel,
    pub pi1: f64,
    pub topologies: Vec<Topology>,
    pub n_values: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub schedule: Schedule,
    pub run_config: RunConfig,
}

/// Mean convergence time at one `(topology, n)` point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSweepResult {
    pub topology: String,
    pub n: usize,
    pub m: usize,
    pub schedule: Schedule,
    pub trials: usize,
    pub converged: usize,
    pub cycled: usize,
    pub exhausted: usize,
    /// Mean total iterations over converged runs only.
    pub mean_convergence_time: f64,
    pub warmup_iterations: u64,
}

/// Convergence time of the MAP quantizer `(−1, 2, 1)` with `ρ = 1/(4m)` (or
/// the decreasing schedule) on fresh data and a fresh graph per run.
pub fn convergence_time_sweep(cfg: &TimeSweepConfig) -> Result<Vec<TimeSweepResult>> {
    if cfg.topologies.is_empty() || cfg.n_values.is_empty() {
        return Err(Error::InvalidParameter("topology and n lists must be non-empty".into()));
    }
    if cfg.trials < 1 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let draw = HypothesisDraw::Prior(cfg.pi1);
    let quantizer = DeltaQuantizer::new(-1.0, 2.0, 1.0)?;
    let mut out = Vec::new();
    for (ti, topology) in cfg.topologies.iter().enumerate() {
        for (ni, &n) in cfg.n_values.iter().enumerate() {
            let m = topology.edge_count(n);
            let point_seed = cfg.seed ^ ((ti as u64) << 48) ^ ((ni as u64) << 32);
            let runs = (0..cfg.trials)
                .into_par_iter()
                .map(|t| {
                    let mut rng = trial_rng(point_seed, t);
                    let truth = draw.draw(&mut rng);
                    let graph = topology.build(n, &mut rng)?;
                    let obs = cfg.model.sample(truth, n, &mut rng)?;
                    let data = local_llrs(&cfg.model, &obs)?;
                    Ok(match cfg.schedule {
                        Schedule::Fixed => {
                            let o = run(&graph, &data, quantizer, 1.0 / (4.0 * m as f64), &cfg.run_config)?;
                            (Terminal::of(&o), o.iterations)
                        }
                        Schedule::Decreasing => {
                            let s = decreasing_rho_run(&graph, &data, quantizer, &cfg.run_config)?;
                            (Terminal::of(&s.outcome), s.total_iterations())
                        }
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let of = |k: Terminal| runs.iter().filter(|(t, _)| *t == k).count();
            let converged = of(Terminal::Converged);
            let total: u64 = runs.iter().filter(|(t, _)| *t == Terminal::Converged).map(|(_, it)| it).sum();
            out.push(TimeSweepResult {
                topology: topology.to_string(),
                n,
                m,
                schedule: cfg.schedule,
                trials: cfg.trials,
                converged,
                cycled: of(Terminal::Cycled),
                exhausted: of(Terminal::Exhausted),
                mean_convergence_time: if converged == 0 { 0.0 } else { total as f64 / converged as f64 },
                warmup_iterations: match cfg.schedule {
                    Schedule::Fixed => 0,
                    Schedule::Decreasing => expected_warmup(n),
                },
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MultiConfig {
    pub models: Vec<Density>,
    pub priors: Vec<f64>,
    pub topology: Topology,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    /// Step size of every round; `None` uses `1/(4m)`.
    pub rho: Option<f64>,
    pub cycle_policy: CyclePolicy,
    pub run_config: RunConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MultiResult {
    pub trials: usize,
    pub decided: usize,
    pub correct: usize,
    pub correct_rate: f64,
    /// Consensus executions per trial, as `(min, max)` over decided trials.
    pub runs_per_trial: (usize, usize),
}

/// Monte Carlo of the multi-hypothesis tournament.
pub fn multi_monte_carlo(cfg: &MultiConfig) -> Result<MultiResult> {
    if cfg.trials < 1 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let m = cfg.topology.edge_count(cfg.n);
    let rho = cfg.rho.unwrap_or(1.0 / (4.0 * m as f64));
    let rows = (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(cfg.seed, t);
            let u: f64 = rng.random();
            let mut acc = 0.0;
            let truth = cfg
                .priors
                .iter()
                .position(|p| {
                    acc += p;
                    u < acc
                })
                .unwrap_or(cfg.priors.len() - 1);
            let graph = cfg.topology.build(cfg.n, &mut rng)?;
            let obs = cfg.models[truth].sample(cfg.n, &mut rng)?;
            let mut calls = 0;
            let res = multi_map(&obs, &cfg.models, &cfg.priors, &graph, cfg.cycle_policy, |data, dc| {
                calls += 1;
                run(&graph, data, dc.quantizer, rho, &cfg.run_config)
            });
            match res {
                Ok(d) => Ok(Some((d.winner == truth, calls))),
                Err(Error::Undecidable(_)) => Ok(None),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let decided: Vec<(bool, usize)> = rows.into_iter().flatten().collect();
    let correct = decided.iter().filter(|(c, _)| *c).count();
    let runs = decided.iter().map(|(_, r)| *r);
    Ok(MultiResult {
        trials: cfg.trials,
        decided: decided.len(),
        correct,
        correct_rate: if decided.is_empty() { 0.0 } else { correct as f64 / decided.len() as f64 },
        runs_per_trial: (runs.clone().min().unwrap_or(0), runs.max().unwrap_or(0)),
    })
}

/// Writes serializable rows as CSV with a header.
pub fn write_csv<T: Serialize, W: Write>(rows: &[T], writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

/// Models with a closed-form centralized baseline are Gaussian pairs.
pub fn is_gaussian(model: &HypothesisModel) -> bool {
    matches!(model.kind(), ModelKind::GaussianPair { .. })
}
