//! Checkable error bounds for terminal outcomes of the δ-quantized protocol.
//!
//! For a converged run at level `x_Q*` with data mean `r̄`:
//!
//! * at `a`:     `|x_Q* − T(r̄)| ≤ (1 + 4ρm/n)(Δ − δ)`
//! * at `a + Δ`: `|x_Q* − T(r̄)| < (1 + 4ρm/n) δ`
//!
//! For a cyclic run: `|r̄ − (a + Δ − δ)| < 6ρnΔ`, every node has the same
//! per-period sum of quantized values, and every visited `x_i` stays within
//! `3ρnΔ / (1 + 2ρn)` of the threshold.

use super::run::{ConsensusOutcome, Termination};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::quantizer::Level;

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergedBound {
    pub level: Level,
    /// `|x_Q* − T(r̄)|`
    pub error: f64,
    pub bound: f64,
    /// Whether the bound is a strict inequality (upper level).
    pub strict: bool,
}

impl ConvergedBound {
    pub fn holds(&self) -> bool {
        if self.strict {
            self.error < self.bound
        } else {
            self.error <= self.bound
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CycleBound {
    pub period: usize,
    /// `|r̄ − threshold|`
    pub mean_gap: f64,
    pub mean_gap_bound: f64,
    /// Per-node count of upper outputs over one period.
    pub upper_counts: Vec<usize>,
    /// Largest `|x_i − threshold|` over the recorded period.
    pub proximity: f64,
    pub proximity_bound: f64,
}

impl CycleBound {
    pub fn sums_equal(&self) -> bool {
        self.upper_counts.windows(2).all(|w| w[0] == w[1])
    }

    pub fn holds(&self) -> bool {
        self.period >= 2
            && self.mean_gap < self.mean_gap_bound
            && self.sums_equal()
            && self.proximity < self.proximity_bound
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum BoundReport {
    Converged { data_mean: f64, bound: ConvergedBound },
    Cycled { data_mean: f64, bound: CycleBound },
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        match self {
            Self::Converged { bound, .. } => bound.holds(),
            Self::Cycled { bound, .. } => bound.holds(),
        }
    }

    /// Smallest distance to a violated bound; non-negative when all hold
    /// (zero only on the non-strict boundary).
    pub fn slack(&self) -> f64 {
        match self {
            Self::Converged { bound, .. } => bound.bound - bound.error,
            Self::Cycled { bound, .. } => (bound.mean_gap_bound - bound.mean_gap)
                .min(bound.proximity_bound - bound.proximity),
        }
    }
}

/// Evaluates the consensus error bounds for a terminal outcome.
///
/// Uses the quantizer, data and final `ρ` carried by the outcome's state.
pub fn check_consensus_bounds(outcome: &ConsensusOutcome, graph: &Graph) -> Result<BoundReport> {
    let state = &outcome.final_state;
    let q = state.quantizer();
    let n = graph.node_count() as f64;
    let m = graph.edge_count() as f64;
    let rho = state.rho();
    let data_mean = state.data_mean();
    let factor = 1.0 + 4.0 * rho * m / n;
    match &outcome.termination {
        Termination::Converged { level } => {
            let error = (q.value(*level) - q.project_unchecked(data_mean)).abs();
            let bound = match level {
                Level::Lower => ConvergedBound {
                    level: *level,
                    error,
                    bound: factor * (q.big_delta() - q.delta()),
                    strict: false,
                },
                Level::Upper => {
                    ConvergedBound { level: *level, error, bound: factor * q.delta(), strict: true }
                }
            };
            Ok(BoundReport::Converged { data_mean, bound })
        }
        Termination::Cycled(cycle) => {
            let thr = q.threshold();
            let proximity = cycle
                .x
                .iter()
                .flat_map(|xs| xs.iter().map(|x| (x - thr).abs()))
                .fold(0.0, f64::max);
            let bound = CycleBound {
                period: cycle.period,
                mean_gap: (data_mean - thr).abs(),
                mean_gap_bound: 6.0 * rho * n * q.big_delta(),
                upper_counts: cycle.upper_counts(),
                proximity,
                proximity_bound: 3.0 * rho * n * q.big_delta() / (1.0 + 2.0 * rho * n),
            };
            Ok(BoundReport::Cycled { data_mean, bound })
        }
        Termination::Exhausted => {
            Err(Error::NotApplicable("bounds only apply to converged or cyclic outcomes".into()))
        }
    }
}
