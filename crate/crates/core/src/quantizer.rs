//! The one-bit δ-quantizer.
//!
//! Values are first projected onto `[a, a + Δ]` and then rounded with an
//! asymmetric rule whose decision point sits at `a + Δ − δ`. Because the
//! projection confines every input to a single quantization cell, the
//! composition reduces to a binary threshold: `a` when `x ≤ a + Δ − δ`,
//! `a + Δ` otherwise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the two quantizer outputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Level {
    Lower,
    Upper,
}

/// Parameters `(a, Δ, δ)` of the one-bit quantizer.
///
/// The threshold is stored as given by the constructor rather than
/// recomputed from `a + Δ − δ`, so configurations that pin the threshold to
/// a specific value (e.g. `−τ`) keep it bit-exact.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeltaQuantizer {
    a: f64,
    big_delta: f64,
    threshold: f64,
}

impl DeltaQuantizer {
    /// Quantizer with lower value `a`, cell width `big_delta` and offset
    /// `delta`, requiring `0 < delta < big_delta`.
    pub fn new(a: f64, big_delta: f64, delta: f64) -> Result<Self> {
        if !(a.is_finite() && big_delta.is_finite() && delta.is_finite()) {
            return Err(Error::InvalidParameter("quantizer parameters must be finite".into()));
        }
        if big_delta <= 0.0 {
            return Err(Error::InvalidParameter(format!("Δ must be positive, got {big_delta}")));
        }
        if !(delta > 0.0 && delta < big_delta) {
            return Err(Error::InvalidParameter(format!(
                "δ must lie in (0, Δ) = (0, {big_delta}), got {delta}"
            )));
        }
        Self::with_threshold(a, big_delta, a + big_delta - delta)
    }

    /// Quantizer defined by its decision threshold, which must lie strictly
    /// inside `(a, a + Δ)`.
    pub fn with_threshold(a: f64, big_delta: f64, threshold: f64) -> Result<Self> {
        if !(a.is_finite() && big_delta.is_finite() && threshold.is_finite()) {
            return Err(Error::InvalidParameter("quantizer parameters must be finite".into()));
        }
        if big_delta <= 0.0 {
            return Err(Error::InvalidParameter(format!("Δ must be positive, got {big_delta}")));
        }
        if !(threshold > a && threshold < a + big_delta) {
            return Err(Error::InvalidParameter(format!(
                "threshold {threshold} must lie strictly inside ({a}, {})",
                a + big_delta
            )));
        }
        Ok(Self { a, big_delta, threshold })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn big_delta(&self) -> f64 {
        self.big_delta
    }

    /// `δ = a + Δ − threshold`.
    pub fn delta(&self) -> f64 {
        self.a + self.big_delta - self.threshold
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    pub fn lower(&self) -> f64 {
        self.a
    }

    pub fn upper(&self) -> f64 {
        self.a + self.big_delta
    }

    pub fn value(&self, level: Level) -> f64 {
        match level {
            Level::Lower => self.lower(),
            Level::Upper => self.upper(),
        }
    }

    /// Nearest point of `[a, a + Δ]`.
    pub fn project(&self, x: f64) -> Result<f64> {
        check_finite(x)?;
        Ok(self.project_unchecked(x))
    }

    pub(crate) fn project_unchecked(&self, x: f64) -> f64 {
        if x < self.a {
            self.a
        } else if x <= self.upper() {
            x
        } else {
            self.upper()
        }
    }

    /// Quantized value of `x`: `a` if `x ≤ threshold`, `a + Δ` otherwise.
    pub fn quantize(&self, x: f64) -> Result<f64> {
        check_finite(x)?;
        Ok(self.value(self.level(x)))
    }

    /// Which side of the threshold `x` falls on. Ties go to the lower level.
    #[inline]
    pub fn level(&self, x: f64) -> Level {
        if x <= self.threshold {
            Level::Lower
        } else {
            Level::Upper
        }
    }

    #[inline]
    pub(crate) fn is_upper(&self, x: f64) -> bool {
        x > self.threshold
    }
}

fn check_finite(x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("non-finite value {x}")))
    }
}
