//! Detection criteria built on top of the consensus protocol.
//!
//! Each criterion fixes a quantizer and a step size ρ. Every node feeds its
//! local LLR into the protocol; convergence to the upper quantization level
//! (or a cycle, under the default policy) accepts `H1`.

use serde::{Deserialize, Serialize};

use crate::consensus::{run, ConsensusOutcome, RunConfig, Termination};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::models::{Density, Hypothesis, HypothesisModel, Observation};
use crate::quantizer::{DeltaQuantizer, Level};

/// How a cyclic terminal regime is turned into a decision.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum CyclePolicy {
    #[default]
    AcceptH1,
    RejectH1,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Criterion {
    /// Neyman–Pearson with a type-I constraint `delta` (the quantizer offset).
    NpConstant { delta: f64 },
    /// Minimum error probability with priors `(pi1, pi2)`.
    Map { pi1: f64, pi2: f64, prior_adjusted: bool },
    /// Neyman–Pearson with an exponential type-I constraint, threshold `−tau`.
    NpExponential { tau: f64 },
    /// Fixed-sample test with LLR threshold `tau_star`.
    FiniteN { tau_star: f64 },
}

/// Quantizer and step size for one detection criterion on a network with `n`
/// nodes and `m` edges.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DetectorConfig {
    pub quantizer: DeltaQuantizer,
    pub rho: f64,
    pub criterion: Criterion,
    pub cycle_policy: CyclePolicy,
    pub n: usize,
    pub m: usize,
}

impl DetectorConfig {
    /// The step size `1/(4m)` used for a cheap first pass.
    pub fn practical_rho(&self) -> f64 {
        1.0 / (4.0 * self.m as f64)
    }

    pub fn with_cycle_policy(mut self, policy: CyclePolicy) -> Self {
        self.cycle_policy = policy;
        self
    }
}

fn check_network(n: usize, m: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidSize(format!("need at least 2 nodes, got {n}")));
    }
    if m < n - 1 || m > n * (n - 1) / 2 {
        return Err(Error::InvalidSize(format!(
            "a connected graph on {n} nodes has between {} and {} edges, got {m}",
            n - 1,
            n * (n - 1) / 2
        )));
    }
    Ok(())
}

/// Quantizer `(0, D(P₁‖P₂), delta)` with `ρ = min{δ/(6n·D(P₁‖P₂)), n/(4m)}`.
pub fn np_constant_config(model: &HypothesisModel, n: usize, m: usize, delta: f64) -> Result<DetectorConfig> {
    check_network(n, m)?;
    let d = model.kl12();
    if !(delta > 0.0 && delta < d) {
        return Err(Error::InvalidParameter(format!("δ must lie in (0, {d}), got {delta}")));
    }
    let (nf, mf) = (n as f64, m as f64);
    Ok(DetectorConfig {
        quantizer: DeltaQuantizer::new(0.0, d, delta)?,
        rho: (delta / (6.0 * nf * d)).min(nf / (4.0 * mf)),
        criterion: Criterion::NpConstant { delta },
        cycle_policy: CyclePolicy::default(),
        n,
        m,
    })
}

/// `|Σ|·ln(n)/n`, the offset of the type-based test on an alphabet of size
/// `|Σ|`. Values at or above `kl12` are replaced by `kl12/2` so the result
/// remains a valid offset for [`np_constant_config`].
pub fn hoeffding_delta(alphabet_size: usize, n: usize, kl12: f64) -> Result<f64> {
    if alphabet_size < 2 || n < 2 {
        return Err(Error::InvalidParameter(format!(
            "need alphabet size ≥ 2 and n ≥ 2, got ({alphabet_size}, {n})"
        )));
    }
    let v = alphabet_size as f64 * (n as f64).ln() / n as f64;
    Ok(if v >= kl12 { kl12 / 2.0 } else { v })
}

/// Quantizer `(−1, 2, 1)` with threshold 0, or with threshold
/// `(1/n)·ln(π₂/π₁)` when `prior_adjusted`; `ρ = 1/(12n²)`.
pub fn map_config(n: usize, m: usize, pi1: f64, pi2: f64, prior_adjusted: bool) -> Result<DetectorConfig> {
    check_network(n, m)?;
    check_priors(&[pi1, pi2])?;
    let threshold = if prior_adjusted {
        if n < 4 {
            return Err(Error::InvalidParameter(format!("prior adjustment needs n ≥ 4, got {n}")));
        }
        let t = (pi2 / pi1).ln() / n as f64;
        if !(t > -1.0 && t < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "adjusted δ = {} falls outside (0, 2)",
                1.0 - t
            )));
        }
        t
    } else {
        0.0
    };
    Ok(DetectorConfig {
        quantizer: DeltaQuantizer::with_threshold(-1.0, 2.0, threshold)?,
        rho: 1.0 / (12.0 * (n * n) as f64),
        criterion: Criterion::Map { pi1, pi2, prior_adjusted },
        cycle_policy: CyclePolicy::default(),
        n,
        m,
    })
}

fn check_priors(priors: &[f64]) -> Result<()> {
    if priors.iter().any(|p| !(p.is_finite() && *p > 0.0)) {
        return Err(Error::InvalidParameter(format!("priors must be positive, got {priors:?}")));
    }
    let total: f64 = priors.iter().sum();
    if (total - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidParameter(format!("priors sum to {total}, not 1")));
    }
    Ok(())
}

/// Quantizer `(−D(P₂‖P₁), D(P₁‖P₂)+D(P₂‖P₁), D(P₁‖P₂)+τ)`, whose threshold is
/// exactly `−τ`; `ρ = 1/(6n²(D(P₁‖P₂)+D(P₂‖P₁)))`.
pub fn np_exponential_config(model: &HypothesisModel, n: usize, m: usize, tau: f64) -> Result<DetectorConfig> {
    check_network(n, m)?;
    let (d12, d21) = (model.kl12(), model.kl21());
    if !(tau > -d12 && tau < d21) {
        return Err(Error::InvalidParameter(format!("τ must lie in ({}, {d21}), got {tau}", -d12)));
    }
    let width = d12 + d21;
    Ok(DetectorConfig {
        quantizer: DeltaQuantizer::with_threshold(-d21, width, -tau)?,
        rho: 1.0 / (6.0 * (n * n) as f64 * width),
        criterion: Criterion::NpExponential { tau },
        cycle_policy: CyclePolicy::default(),
        n,
        m,
    })
}

/// Smallest `τ` with `Λ*(τ) = γ`, for `0 < γ < Λ*(D(P₂‖P₁))`.
///
/// `Λ*` increases on `[−D(P₁‖P₂), ∞)`, so bisection on
/// `[−D(P₁‖P₂), D(P₂‖P₁)]` finds it. Stops once `|Λ*(τ) − γ| ≤ 1e−10`.
pub fn tau_from_gamma(model: &HypothesisModel, gamma: f64) -> Result<f64> {
    let (d12, d21) = (model.kl12(), model.kl21());
    let top = model.rate_function(d21)?;
    if !(gamma > 0.0 && gamma < top) {
        return Err(Error::InvalidParameter(format!("γ must lie in (0, {top}), got {gamma}")));
    }
    let (mut lo, mut hi) = (-d12, d21);
    let mut mid = 0.5 * (lo + hi);
    for _ in 0..200 {
        mid = 0.5 * (lo + hi);
        let v = model.rate_function(mid)?;
        if (v - gamma).abs() <= 1e-10 {
            break;
        }
        if v < gamma {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON * hi.abs().max(1.0) {
            break;
        }
    }
    Ok(mid)
}

/// Quantizer `(τ*−1, 2, 1)`, threshold exactly `τ*`, with a caller-chosen
/// `rho < n/(4m)`.
pub fn finite_n_config(tau_star: f64, n: usize, m: usize, rho: f64) -> Result<DetectorConfig> {
    check_network(n, m)?;
    if !tau_star.is_finite() {
        return Err(Error::InvalidParameter(format!("τ* must be finite, got {tau_star}")));
    }
    let cap = n as f64 / (4.0 * m as f64);
    if !(rho > 0.0 && rho < cap) {
        return Err(Error::InvalidParameter(format!("ρ must lie in (0, {cap}), got {rho}")));
    }
    Ok(DetectorConfig {
        quantizer: DeltaQuantizer::with_threshold(tau_star - 1.0, 2.0, tau_star)?,
        rho,
        criterion: Criterion::FiniteN { tau_star },
        cycle_policy: CyclePolicy::default(),
        n,
        m,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OutcomeKind {
    Converged,
    Cycled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub accepted: Hypothesis,
    pub outcome_kind: OutcomeKind,
    /// Whether every node reaches the same decision on its own.
    pub per_node_consistent: bool,
}

/// Maps a terminal consensus regime to a decision. Exhausted runs are
/// reported as [`Error::Undecidable`].
pub fn decide(outcome: &ConsensusOutcome, config: &DetectorConfig) -> Result<Decision> {
    match &outcome.termination {
        Termination::Converged { level } => {
            let state = &outcome.final_state;
            let consistent = (0..state.node_count()).all(|i| state.level(i) == *level);
            Ok(Decision {
                accepted: match level {
                    Level::Upper => Hypothesis::H1,
                    Level::Lower => Hypothesis::H2,
                },
                outcome_kind: OutcomeKind::Converged,
                per_node_consistent: consistent,
            })
        }
        Termination::Cycled(cycle) => Ok(Decision {
            accepted: match config.cycle_policy {
                CyclePolicy::AcceptH1 => Hypothesis::H1,
                CyclePolicy::RejectH1 => Hypothesis::H2,
            },
            outcome_kind: OutcomeKind::Cycled,
            // The whole network state recurs, so every node observes the cycle.
            per_node_consistent: cycle.period >= 2,
        }),
        Termination::Exhausted => Err(Error::Undecidable(format!(
            "no terminal regime after {} iterations at ρ = {}",
            outcome.iterations,
            outcome.final_state.rho()
        ))),
    }
}

/// Which step size(s) [`execute`] uses.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum RhoStrategy {
    /// The criterion's own ρ.
    #[default]
    Strict,
    /// `1/(4m)` only.
    Practical,
    /// `1/(4m)` first; on a cycle, rerun from scratch with the criterion's ρ.
    TwoStage,
}

#[derive(Debug, Clone)]
pub struct Execution {
    /// Outcome of the last run, the one the decision is based on.
    pub outcome: ConsensusOutcome,
    pub rho_used: f64,
    pub first_pass_cycled: bool,
    pub consensus_runs: usize,
    /// Iterations summed over all runs.
    pub total_iterations: u64,
}

/// Runs the protocol on `data` with the configured quantizer.
pub fn execute(
    graph: &Graph,
    data: &[f64],
    config: &DetectorConfig,
    strategy: RhoStrategy,
    run_config: &RunConfig,
) -> Result<Execution> {
    let first_rho = match strategy {
        RhoStrategy::Strict => config.rho,
        RhoStrategy::Practical | RhoStrategy::TwoStage => config.practical_rho(),
    };
    let first = run(graph, data, config.quantizer, first_rho, run_config)?;
    let cycled = first.is_cycled();
    if strategy == RhoStrategy::TwoStage && cycled {
        let second = run(graph, data, config.quantizer, config.rho, run_config)?;
        let total = first.iterations + second.iterations;
        return Ok(Execution {
            outcome: second,
            rho_used: config.rho,
            first_pass_cycled: true,
            consensus_runs: 2,
            total_iterations: total,
        });
    }
    let total = first.iterations;
    Ok(Execution { outcome: first, rho_used: first_rho, first_pass_cycled: cycled, consensus_runs: 1, total_iterations: total })
}

/// One pairwise comparison of the tournament.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round {
    pub incumbent: usize,
    pub challenger: usize,
    pub winner: usize,
    pub outcome_kind: OutcomeKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiDecision {
    /// Index into the model list.
    pub winner: usize,
    pub rounds: Vec<Round>,
}

/// MAP detection among `W ≥ 2` hypotheses by a sequential tournament.
///
/// Round `k` pits the current winner `w` against model `k+1` with data
/// `ln p_w(y_i)/p_{w'}(y_i)` and threshold `(1/n)·ln(π_{w'}/π_w)`, clamped
/// into the open quantizer cell. `runner` performs one consensus execution
/// per round, so exactly `W − 1` executions happen.
pub fn multi_map<F>(
    observations: &[Observation],
    models: &[Density],
    priors: &[f64],
    graph: &Graph,
    cycle_policy: CyclePolicy,
    mut runner: F,
) -> Result<MultiDecision>
where
    F: FnMut(&[f64], &DetectorConfig) -> Result<ConsensusOutcome>,
{
    let w_count = models.len();
    if w_count < 2 {
        return Err(Error::InvalidSize(format!("need at least 2 models, got {w_count}")));
    }
    if priors.len() != w_count {
        return Err(Error::InvalidSize(format!("{} priors for {w_count} models", priors.len())));
    }
    check_priors(priors)?;
    let n = graph.node_count();
    if observations.len() != n {
        return Err(Error::InvalidSize(format!("{} observations for {n} nodes", observations.len())));
    }
    for (j, other) in models.iter().enumerate().skip(1) {
        HypothesisModel::from_densities(&models[0], other).map_err(|e| {
            Error::InvalidParameter(format!("models 0 and {j} cannot be compared: {e}"))
        })?;
    }

    let mut winner = 0;
    let mut rounds = Vec::with_capacity(w_count - 1);
    for challenger in 1..w_count {
        let data = observations
            .iter()
            .map(|&y| Ok(models[winner].log_density(y)? - models[challenger].log_density(y)?))
            .collect::<Result<Vec<f64>>>()?;
        let limit = 1.0 - 1e-9;
        let threshold = ((priors[challenger] / priors[winner]).ln() / n as f64).clamp(-limit, limit);
        let config = DetectorConfig {
            quantizer: DeltaQuantizer::with_threshold(-1.0, 2.0, threshold)?,
            rho: 1.0 / (12.0 * (n * n) as f64),
            criterion: Criterion::Map { pi1: priors[winner], pi2: priors[challenger], prior_adjusted: true },
            cycle_policy,
            n,
            m: graph.edge_count(),
        };
        let outcome = runner(&data, &config)?;
        let decision = decide(&outcome, &config).map_err(|e| {
            Error::Undecidable(format!(
                "round {challenger} ({winner} vs {challenger}) after rounds {rounds:?}: {e}"
            ))
        })?;
        let next = match decision.accepted {
            Hypothesis::H1 => winner,
            Hypothesis::H2 => challenger,
        };
        rounds.push(Round { incumbent: winner, challenger, winner: next, outcome_kind: decision.outcome_kind });
        winner = next;
    }
    Ok(MultiDecision { winner, rounds })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> HypothesisModel {
        HypothesisModel::gaussian(1.0, -1.0, 10.0).unwrap()
    }

    #[test]
    fn np_constant_recipe() {
        let c = np_constant_config(&example(), 10, 9, 0.1).unwrap();
        assert!((c.rho - 1.0 / 120.0).abs() < 1e-15);
        assert_eq!(c.quantizer.a(), 0.0);
        assert!((c.quantizer.big_delta() - 0.2).abs() < 1e-15);
        assert!((c.quantizer.delta() - 0.1).abs() < 1e-15);
        assert!(np_constant_config(&example(), 10, 9, 0.2).is_err());
        assert!(np_constant_config(&example(), 10, 9, 0.0).is_err());
        assert!(np_constant_config(&example(), 10, 8, 0.1).is_err());
        let c = np_constant_config(&example(), 50, 1225, 0.19).unwrap();
        assert_eq!(c.rho, (0.19 / (6.0 * 50.0 * 0.2f64)).min(50.0 / 4900.0));
    }

    #[test]
    fn hoeffding_values() {
        assert!((hoeffding_delta(2, 100, 1.0).unwrap() - 2.0 * 100f64.ln() / 100.0).abs() < 1e-15);
        assert_eq!(hoeffding_delta(4, 4, 1.0).unwrap(), 0.5);
        assert!((hoeffding_delta(4, 4, 3.0).unwrap() - 4f64.ln()).abs() < 1e-15);
        let mut prev = f64::INFINITY;
        for n in 3..500 {
            let v = hoeffding_delta(3, n, 100.0).unwrap();
            assert!(v < prev);
            prev = v;
        }
        assert!(hoeffding_delta(1, 10, 1.0).is_err());
    }

    #[test]
    fn map_recipe() {
        let c = map_config(10, 9, 0.5, 0.5, false).unwrap();
        assert_eq!(c.rho, 1.0 / 1200.0);
        assert_eq!(c.quantizer.threshold(), 0.0);
        assert_eq!((c.quantizer.a(), c.quantizer.big_delta(), c.quantizer.delta()), (-1.0, 2.0, 1.0));
        let adj = map_config(10, 9, 0.5, 0.5, true).unwrap();
        assert_eq!(adj.quantizer, c.quantizer);
        let skewed = map_config(10, 9, 0.1, 0.9, true).unwrap();
        assert!((skewed.quantizer.delta() - (1.0 - 9f64.ln() / 10.0)).abs() < 1e-15);
        assert!((skewed.quantizer.delta() - 0.7803).abs() < 1e-4);
        assert!(map_config(3, 2, 0.5, 0.5, true).is_err());
        assert!(map_config(10, 9, 0.5, 0.6, false).is_err());
        assert!(map_config(4, 3, 1e-4, 1.0 - 1e-4, true).is_err());
    }

    #[test]
    fn np_exponential_recipe() {
        let c = np_exponential_config(&example(), 10, 9, 0.0).unwrap();
        assert!((c.quantizer.a() + 0.2).abs() < 1e-15);
        assert!((c.quantizer.big_delta() - 0.4).abs() < 1e-15);
        assert!((c.quantizer.delta() - 0.2).abs() < 1e-15);
        assert_eq!(c.quantizer.threshold(), 0.0);
        assert!((c.rho - 1.0 / 240.0).abs() < 1e-15);
        for tau in [-0.15, -0.01, 0.07, 0.19] {
            let c = np_exponential_config(&example(), 10, 9, tau).unwrap();
            assert_eq!(c.quantizer.threshold(), -tau);
        }
        assert!(np_exponential_config(&example(), 10, 9, 0.2).is_err());
        assert!(np_exponential_config(&example(), 10, 9, -0.2).is_err());
    }

    #[test]
    fn tau_from_gamma_inverts_rate() {
        let m = example();
        for gamma in [0.001, 0.02, 0.05, 0.15] {
            let tau = tau_from_gamma(&m, gamma).unwrap();
            // Gaussian closed form: Λ*(τ) = (τ + D)²/(2v) with D = 0.2, v = 0.4.
            let closed = (0.8 * gamma).sqrt() - 0.2;
            assert!((tau - closed).abs() < 1e-8, "γ={gamma}: {tau} vs {closed}");
        }
        assert!(tau_from_gamma(&m, 0.0).is_err());
        assert!(tau_from_gamma(&m, 0.21).is_err());
    }

    #[test]
    fn finite_n_recipe() {
        let c = finite_n_config(0.0, 10, 9, 0.01).unwrap();
        assert_eq!((c.quantizer.a(), c.quantizer.big_delta(), c.quantizer.delta()), (-1.0, 2.0, 1.0));
        assert_eq!(finite_n_config(0.37, 10, 9, 0.01).unwrap().quantizer.threshold(), 0.37);
        assert!(finite_n_config(0.0, 10, 9, 10.0 / 36.0).is_err());
    }

    #[test]
    fn decisions_follow_levels_and_policy() {
        let g = Graph::star(10).unwrap();
        let c = map_config(10, 9, 0.5, 0.5, false).unwrap();
        let cfg = RunConfig::default();
        let up = run(&g, &[0.5; 10], c.quantizer, c.practical_rho(), &cfg).unwrap();
        let d = decide(&up, &c).unwrap();
        assert_eq!(d.accepted, Hypothesis::H1);
        assert_eq!(d.outcome_kind, OutcomeKind::Converged);
        assert!(d.per_node_consistent);
        let down = run(&g, &[-0.5; 10], c.quantizer, c.practical_rho(), &cfg).unwrap();
        assert_eq!(decide(&down, &c).unwrap().accepted, Hypothesis::H2);

        let tight = RunConfig { max_iter: 1, ..RunConfig::default() };
        let cut = run(&g, &[0.5; 10], c.quantizer, c.rho, &tight).unwrap();
        assert!(matches!(decide(&cut, &c), Err(Error::Undecidable(_))));
    }

    #[test]
    fn cycle_policy_applies_to_cycles() {
        let g = Graph::path(2).unwrap();
        let q = DeltaQuantizer::with_threshold(-1.0, 2.0, 0.0).unwrap();
        let c = DetectorConfig {
            quantizer: q,
            rho: 0.1,
            criterion: Criterion::FiniteN { tau_star: 0.0 },
            cycle_policy: CyclePolicy::AcceptH1,
            n: 2,
            m: 1,
        };
        // Search a small grid for a cycling instance to exercise the policy.
        let found = (1..400).find_map(|k| {
            let r = k as f64 * 0.01;
            let out = run(&g, &[r, -r - 0.003], q, 0.3, &RunConfig::default()).unwrap();
            out.is_cycled().then_some(out)
        });
        let out = found.expect("a cycling instance in the grid");
        assert_eq!(decide(&out, &c).unwrap().accepted, Hypothesis::H1);
        let rejecting = c.with_cycle_policy(CyclePolicy::RejectH1);
        let d = decide(&out, &rejecting).unwrap();
        assert_eq!(d.accepted, Hypothesis::H2);
        assert_eq!(d.outcome_kind, OutcomeKind::Cycled);
    }

    #[test]
    fn two_stage_only_reruns_on_cycles() {
        let g = Graph::star(10).unwrap();
        let c = map_config(10, 9, 0.5, 0.5, false).unwrap();
        let e = execute(&g, &[0.3; 10], &c, RhoStrategy::TwoStage, &RunConfig::default()).unwrap();
        assert_eq!(e.consensus_runs, 1);
        assert!(!e.first_pass_cycled);
        assert_eq!(e.rho_used, 1.0 / 36.0);
    }

    #[test]
    fn two_model_tournament_matches_map() {
        let g = Graph::star(6).unwrap();
        let m1 = Density::gaussian(1.0, 10.0).unwrap();
        let m2 = Density::gaussian(-1.0, 10.0).unwrap();
        let ys = [0.4, -2.0, 3.1, 0.2, -0.1, 1.5];
        let obs: Vec<_> = ys.iter().map(|&y| Observation::Real(y)).collect();
        let mut calls = 0;
        let res = multi_map(&obs, &[m1, m2], &[0.5, 0.5], &g, CyclePolicy::AcceptH1, |data, cfg| {
            calls += 1;
            run(&g, data, cfg.quantizer, cfg.practical_rho(), &RunConfig::default())
        })
        .unwrap();
        assert_eq!(calls, 1);
        let model = example();
        let data: Vec<f64> = obs.iter().map(|&o| model.llr(o).unwrap()).collect();
        let c = map_config(6, 5, 0.5, 0.5, false).unwrap();
        let single = run(&g, &data, c.quantizer, c.practical_rho(), &RunConfig::default()).unwrap();
        let expected = match decide(&single, &c).unwrap().accepted {
            Hypothesis::H1 => 0,
            Hypothesis::H2 => 1,
        };
        assert_eq!(res.winner, expected);
    }

    #[test]
    fn tournament_runs_w_minus_one_rounds() {
        let g = Graph::complete(5).unwrap();
        let models: Vec<_> = [3.0, 0.0, -3.0, 6.0].iter().map(|&m| Density::gaussian(m, 1.0).unwrap()).collect();
        let obs = vec![Observation::Real(-3.1); 5];
        let mut calls = 0;
        let res = multi_map(&obs, &models, &[0.25; 4], &g, CyclePolicy::AcceptH1, |data, cfg| {
            calls += 1;
            run(&g, data, cfg.quantizer, cfg.practical_rho(), &RunConfig::default())
        })
        .unwrap();
        assert_eq!(calls, 3);
        assert_eq!(res.rounds.len(), 3);
        assert_eq!(res.winner, 2);
        assert!(multi_map(&obs, &models[..1], &[1.0], &g, CyclePolicy::AcceptH1, |_, _| unreachable!()).is_err());
    }
}
