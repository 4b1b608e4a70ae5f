use std::collections::VecDeque;
use std::hash::Hasher;

use rustc_hash::{FxHashMap, FxHasher};
use serde::{Deserialize, Serialize};

use super::ConsensusState;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::quantizer::{DeltaQuantizer, Level};

/// Stopping parameters for a consensus run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    /// Iteration cap; reaching it yields [`Termination::Exhausted`].
    pub max_iter: u64,
    /// Number of trailing states searched for a recurrence. Bounds the
    /// largest detectable cycle period.
    pub cycle_window: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self { max_iter: 1_000_000, cycle_window: 256 }
    }
}

impl RunConfig {
    fn validate(&self) -> Result<()> {
        if self.max_iter < 1 {
            return Err(Error::InvalidParameter("max_iter must be at least 1".into()));
        }
        if self.cycle_window < 2 {
            return Err(Error::InvalidParameter("cycle_window must be at least 2".into()));
        }
        Ok(())
    }
}

/// One period of a cyclic terminal regime.
#[derive(Debug, Clone, PartialEq)]
pub struct Cycle {
    pub period: usize,
    /// Iteration index of the first state of the recorded period.
    pub entered_at: u64,
    /// `x` at iterations `entered_at .. entered_at + period`.
    pub x: Vec<Vec<f64>>,
    /// Quantized levels at the same iterations.
    pub levels: Vec<Vec<Level>>,
}

impl Cycle {
    /// Number of upper-level outputs of each node over one period.
    pub fn upper_counts(&self) -> Vec<usize> {
        let n = self.levels.first().map_or(0, Vec::len);
        (0..n)
            .map(|i| self.levels.iter().filter(|lv| lv[i] == Level::Upper).count())
            .collect()
    }

    /// `Σ_{l<T} Q(x_i^{k+l})` for each node.
    pub fn quantized_sums(&self, q: &DeltaQuantizer) -> Vec<f64> {
        let n = self.levels.first().map_or(0, Vec::len);
        (0..n).map(|i| self.levels.iter().map(|lv| q.value(lv[i])).sum()).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Termination {
    /// All nodes hold the same quantized value and the state is a fixed point.
    Converged { level: Level },
    /// The full state recurred with period ≥ 2.
    Cycled(Cycle),
    /// The iteration cap was reached first.
    Exhausted,
}

#[derive(Debug, Clone)]
pub struct ConsensusOutcome {
    pub termination: Termination,
    /// Steps executed by this run.
    pub iterations: u64,
    pub final_state: ConsensusState,
}

impl ConsensusOutcome {
    pub fn is_converged(&self) -> bool {
        matches!(self.termination, Termination::Converged { .. })
    }

    pub fn is_cycled(&self) -> bool {
        matches!(self.termination, Termination::Cycled(_))
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self.termination, Termination::Exhausted)
    }

    /// Converged quantization value `x_Q*`.
    pub fn level_value(&self) -> Option<f64> {
        match self.termination {
            Termination::Converged { level } => Some(self.final_state.quantizer().value(level)),
            _ => None,
        }
    }

    pub fn period(&self) -> Option<usize> {
        match &self.termination {
            Termination::Cycled(c) => Some(c.period),
            _ => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.termination {
            Termination::Converged { .. } => "converged",
            Termination::Cycled(_) => "cycled",
            Termination::Exhausted => "exhausted",
        }
    }
}

/// Runs the protocol from the zero state until convergence, a cycle, or the
/// iteration cap.
pub fn run(
    graph: &Graph,
    data: &[f64],
    quantizer: DeltaQuantizer,
    rho: f64,
    config: &RunConfig,
) -> Result<ConsensusOutcome> {
    let state = ConsensusState::new(graph, data, quantizer, rho)?;
    run_from(state, graph, config)
}

/// Continues from an arbitrary state.
pub fn run_from(state: ConsensusState, graph: &Graph, config: &RunConfig) -> Result<ConsensusOutcome> {
    run_observed(state, graph, config, |_| {})
}

/// Like [`run_from`], calling `observe` on the starting state and after
/// every step.
pub fn run_observed<F>(
    mut state: ConsensusState,
    graph: &Graph,
    config: &RunConfig,
    mut observe: F,
) -> Result<ConsensusOutcome>
where
    F: FnMut(&ConsensusState),
{
    config.validate()?;
    if state.node_count() != graph.node_count() {
        return Err(Error::InvalidInput("state and graph disagree on node count".into()));
    }
    observe(&state);
    let mut history = History::new(config.cycle_window);
    history.push(&state);
    let mut prev_common = state.common_level();

    for done in 1..=config.max_iter {
        state.step(graph);
        observe(&state);
        let common = state.common_level();
        if let (Some(a), Some(b)) = (prev_common, common) {
            if a == b {
                debug_assert_fixed_point(&state, graph);
                return Ok(ConsensusOutcome {
                    termination: Termination::Converged { level: b },
                    iterations: done,
                    final_state: state,
                });
            }
        }
        prev_common = common;
        if let Some(cycle) = history.find_recurrence(&state) {
            return Ok(ConsensusOutcome {
                termination: Termination::Cycled(cycle),
                iterations: done,
                final_state: state,
            });
        }
        history.push(&state);
    }
    let iterations = config.max_iter;
    Ok(ConsensusOutcome { termination: Termination::Exhausted, iterations, final_state: state })
}

#[cfg(debug_assertions)]
fn debug_assert_fixed_point(state: &ConsensusState, graph: &Graph) {
    let mut next = state.clone();
    next.step(graph);
    debug_assert!(
        next.x().iter().zip(state.x()).all(|(a, b)| a.to_bits() == b.to_bits())
            && next.dual_counts() == state.dual_counts(),
        "convergence certificate did not yield a fixed point"
    );
}

#[cfg(not(debug_assertions))]
fn debug_assert_fixed_point(_: &ConsensusState, _: &Graph) {}

struct Snapshot {
    iteration: u64,
    hash: u64,
    x: Vec<f64>,
    duals: Vec<i64>,
    upper: Vec<bool>,
}

/// The most recent states of one run (consecutive iterations), indexed by a
/// hash of `(x, α)`.
struct History {
    ring: VecDeque<Snapshot>,
    capacity: usize,
    index: FxHashMap<u64, u64>,
}

impl History {
    fn new(capacity: usize) -> Self {
        Self { ring: VecDeque::with_capacity(capacity), capacity, index: FxHashMap::default() }
    }

    fn push(&mut self, state: &ConsensusState) {
        let hash = state_hash(state);
        let iteration = state.iteration();
        let snap = if self.ring.len() == self.capacity {
            let mut old = self.ring.pop_front().expect("capacity is at least 2");
            if self.index.get(&old.hash) == Some(&old.iteration) {
                self.index.remove(&old.hash);
            }
            old.iteration = iteration;
            old.hash = hash;
            old.x.copy_from_slice(state.x());
            old.duals.copy_from_slice(state.dual_counts());
            old.upper.copy_from_slice(state.upper_flags());
            old
        } else {
            Snapshot {
                iteration,
                hash,
                x: state.x().to_vec(),
                duals: state.dual_counts().to_vec(),
                upper: state.upper_flags().to_vec(),
            }
        };
        self.ring.push_back(snap);
        self.index.insert(hash, iteration);
    }

    fn get(&self, iteration: u64) -> Option<&Snapshot> {
        let first = self.ring.front()?.iteration;
        let snap = self.ring.get(iteration.checked_sub(first)? as usize)?;
        debug_assert_eq!(snap.iteration, iteration);
        Some(snap)
    }

    fn find_recurrence(&self, state: &ConsensusState) -> Option<Cycle> {
        let hash = state_hash(state);
        let &earlier = self.index.get(&hash)?;
        let snap = self.get(earlier)?;
        let same = snap.duals == state.dual_counts()
            && snap.x.iter().zip(state.x()).all(|(a, b)| a.to_bits() == b.to_bits());
        if !same {
            return None;
        }
        let period = (state.iteration() - earlier) as usize;
        let mut x = Vec::with_capacity(period);
        let mut levels = Vec::with_capacity(period);
        for k in earlier..state.iteration() {
            let s = self.get(k)?;
            x.push(s.x.clone());
            levels.push(
                s.upper.iter().map(|&u| if u { Level::Upper } else { Level::Lower }).collect(),
            );
        }
        Some(Cycle { period, entered_at: earlier, x, levels })
    }
}

fn state_hash(state: &ConsensusState) -> u64 {
    let mut h = FxHasher::default();
    for v in state.x() {
        h.write_u64(v.to_bits());
    }
    for &c in state.dual_counts() {
        h.write_i64(c);
    }
    h.finish()
}
