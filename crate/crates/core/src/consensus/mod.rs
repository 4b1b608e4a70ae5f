//! Quantized consensus ADMM with the one-bit δ-quantizer.
//!
//! Every node holds a primal value `x_i`, a dual value `α_i` and its local
//! data `r_i`, and only ever exposes the one-bit quantized value of `x_i` to
//! its neighbors. One iteration is two synchronous phases:
//!
//! ```text
//! x_i ← (ρ|N_i| Q(x_i) + ρ Σ_{j∈N_i} Q(x_j) − α_i + r_i) / (1 + 2ρ|N_i|)
//! α_i ← α_i + ρ (|N_i| Q(x_i) − Σ_{j∈N_i} Q(x_j))        (with the new x)
//! ```
//!
//! Because `Q` only takes the values `a` and `a + Δ`, each dual increment is
//! `ρΔ` times an integer. The state stores that integer exactly, so the
//! trajectory is a deterministic function of a finite-precision-free
//! discrete state and recurrences are detected bit for bit.

mod bounds;
mod run;
mod trace;

pub use bounds::{check_consensus_bounds, BoundReport, ConvergedBound, CycleBound};
pub use run::{run, run_from, run_observed, Cycle, ConsensusOutcome, RunConfig, Termination};
pub use trace::TraceWriter;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::quantizer::{DeltaQuantizer, Level};

/// Full protocol state after `iteration` steps.
#[derive(Debug, Clone, PartialEq)]
pub struct ConsensusState {
    quantizer: DeltaQuantizer,
    rho: f64,
    data: Vec<f64>,
    x: Vec<f64>,
    upper: Vec<bool>,
    dual_base: Vec<f64>,
    dual_count: Vec<i64>,
    dual_unit: f64,
    iteration: u64,
}

impl ConsensusState {
    /// Zero-initialized state for `data` on `graph`.
    pub fn new(graph: &Graph, data: &[f64], quantizer: DeltaQuantizer, rho: f64) -> Result<Self> {
        let n = graph.node_count();
        if data.len() != n {
            return Err(Error::InvalidInput(format!(
                "data has {} entries but the graph has {n} nodes",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidInput(format!("non-finite data value {bad}")));
        }
        check_rho(rho)?;
        let start = quantizer.is_upper(0.0);
        Ok(Self {
            quantizer,
            rho,
            data: data.to_vec(),
            x: vec![0.0; n],
            upper: vec![start; n],
            dual_base: vec![0.0; n],
            dual_count: vec![0; n],
            dual_unit: rho * quantizer.big_delta(),
            iteration: 0,
        })
    }

    /// One synchronous iteration.
    pub fn step(&mut self, graph: &Graph) {
        debug_assert_eq!(graph.node_count(), self.x.len());
        let lo = self.quantizer.lower();
        let hi = self.quantizer.upper();
        let rho = self.rho;
        let q = |b: bool| if b { hi } else { lo };

        // x only reads the quantized snapshot, which is untouched until all
        // nodes are updated.
        for i in 0..self.x.len() {
            let nbrs = graph.neighbors(i);
            let deg = nbrs.len() as f64;
            let mut sum = 0.0;
            for &j in nbrs {
                sum += q(self.upper[j]);
            }
            let alpha = self.dual_base[i] + self.dual_unit * self.dual_count[i] as f64;
            self.x[i] =
                (rho * deg * q(self.upper[i]) + rho * sum - alpha + self.data[i]) / (1.0 + 2.0 * rho * deg);
        }
        for i in 0..self.x.len() {
            self.upper[i] = self.quantizer.is_upper(self.x[i]);
        }
        for i in 0..self.x.len() {
            let nbrs = graph.neighbors(i);
            let up_nbrs = nbrs.iter().filter(|&&j| self.upper[j]).count() as i64;
            let own = if self.upper[i] { nbrs.len() as i64 } else { 0 };
            self.dual_count[i] += own - up_nbrs;
        }
        self.iteration += 1;
    }

    /// Switches the algorithm parameter while keeping `(x, α)`.
    pub fn set_rho(&mut self, rho: f64) -> Result<()> {
        check_rho(rho)?;
        for (base, count) in self.dual_base.iter_mut().zip(self.dual_count.iter_mut()) {
            *base += self.dual_unit * *count as f64;
            *count = 0;
        }
        self.rho = rho;
        self.dual_unit = rho * self.quantizer.big_delta();
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.x.len()
    }

    pub fn iteration(&self) -> u64 {
        self.iteration
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn quantizer(&self) -> &DeltaQuantizer {
        &self.quantizer
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mean(&self) -> f64 {
        self.data.iter().sum::<f64>() / self.data.len() as f64
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn alpha(&self, i: usize) -> f64 {
        self.dual_base[i] + self.dual_unit * self.dual_count[i] as f64
    }

    pub fn alphas(&self) -> Vec<f64> {
        (0..self.x.len()).map(|i| self.alpha(i)).collect()
    }

    /// `Σ_i α_i`, zero in exact arithmetic at every iteration.
    pub fn dual_sum(&self) -> f64 {
        (0..self.x.len()).map(|i| self.alpha(i)).sum()
    }

    pub fn level(&self, i: usize) -> Level {
        if self.upper[i] {
            Level::Upper
        } else {
            Level::Lower
        }
    }

    /// Quantized values `Q(x_i)` for the current iteration.
    pub fn quantized(&self) -> Vec<f64> {
        (0..self.x.len()).map(|i| self.quantizer.value(self.level(i))).collect()
    }

    pub(crate) fn upper_flags(&self) -> &[bool] {
        &self.upper
    }

    pub(crate) fn dual_counts(&self) -> &[i64] {
        &self.dual_count
    }

    /// The common level when every node quantizes to the same value.
    pub fn common_level(&self) -> Option<Level> {
        let first = *self.upper.first()?;
        self.upper.iter().all(|&b| b == first).then(|| self.level(0))
    }
}

fn check_rho(rho: f64) -> Result<()> {
    if rho.is_finite() && rho > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("ρ must be positive and finite, got {rho}")))
    }
}
