//! Binary hypothesis models and their large-deviation quantities.
//!
//! All logarithms are natural, so LLRs, divergences and exponents are in nats.
//!
//! * `llr(y) = ln p₁(y)/p₂(y)`
//! * `Λ(λ) = ln E_{P₁}[exp(−λ·llr)]`, with `Λ(0) = Λ(1) = 0`
//! * `Λ*(τ) = sup_λ {λτ − Λ(λ)}`
//! * Chernoff information `C = Λ*(0) = −min_{λ∈[0,1]} ln ∫ p₁^λ p₂^{1−λ}`

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::io::BufRead;

use rand::distr::weighted::WeightedIndex;
use rand::Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::optimize::{concave_sup, golden_max};

const SUM_TOL: f64 = 1e-12;

/// Which hypothesis generated the data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Hypothesis {
    H1,
    H2,
}

/// A single sensor observation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Observation {
    Real(f64),
    Symbol(usize),
}

/// Direction of a relative entropy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `D(P₁‖P₂)`
    OneToTwo,
    /// `D(P₂‖P₁)`
    TwoToOne,
}

/// A single distribution; pairs of these form a [`HypothesisModel`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Density {
    Gaussian { mean: f64, var: f64 },
    Discrete { pmf: Vec<f64> },
}

impl Density {
    pub fn gaussian(mean: f64, var: f64) -> Result<Self> {
        if !mean.is_finite() || !(var.is_finite() && var > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "Gaussian needs finite mean and positive variance, got ({mean}, {var})"
            )));
        }
        Ok(Self::Gaussian { mean, var })
    }

    pub fn discrete(pmf: Vec<f64>) -> Result<Self> {
        if pmf.len() < 2 {
            return Err(Error::InvalidParameter("alphabet needs at least two symbols".into()));
        }
        if pmf.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::InvalidParameter("probabilities must be finite and ≥ 0".into()));
        }
        let total: f64 = pmf.iter().sum();
        if (total - 1.0).abs() > SUM_TOL {
            return Err(Error::InvalidParameter(format!("probabilities sum to {total}, not 1")));
        }
        Ok(Self::Discrete { pmf })
    }

    /// Natural log of the density (or mass) at `y`.
    pub fn log_density(&self, y: Observation) -> Result<f64> {
        match (self, y) {
            (Self::Gaussian { mean, var }, Observation::Real(v)) => {
                Ok(-0.5 * (2.0 * PI * var).ln() - (v - mean) * (v - mean) / (2.0 * var))
            }
            (Self::Discrete { pmf }, Observation::Symbol(s)) => match pmf.get(s) {
                Some(&p) if p > 0.0 => Ok(p.ln()),
                _ => Err(Error::InvalidInput(format!("symbol {s} outside the support"))),
            },
            _ => Err(Error::InvalidInput("observation type does not match the model".into())),
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, count: usize, rng: &mut R) -> Result<Vec<Observation>> {
        if count == 0 {
            return Err(Error::InvalidInput("sample count must be at least 1".into()));
        }
        Ok(match self {
            Self::Gaussian { mean, var } => {
                let normal = Normal::new(*mean, var.sqrt())
                    .map_err(|e| Error::InvalidParameter(e.to_string()))?;
                (0..count).map(|_| Observation::Real(normal.sample(rng))).collect()
            }
            Self::Discrete { pmf } => {
                let index = WeightedIndex::new(pmf).map_err(|e| Error::InvalidParameter(e.to_string()))?;
                (0..count).map(|_| Observation::Symbol(index.sample(rng))).collect()
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ModelKind {
    /// `N(mu1, var)` versus `N(mu2, var)`.
    GaussianPair { mu1: f64, mu2: f64, var: f64 },
    /// Two probability vectors over the same finite alphabet.
    DiscretePair { pmf1: Vec<f64>, pmf2: Vec<f64> },
}

/// A pair of mutually absolutely continuous distributions with strictly
/// positive, finite divergences in both directions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypothesisModel {
    kind: ModelKind,
    kl12: f64,
    kl21: f64,
}

impl HypothesisModel {
    pub fn gaussian(mu1: f64, mu2: f64, var: f64) -> Result<Self> {
        Density::gaussian(mu1, var)?;
        Density::gaussian(mu2, var)?;
        if mu1 == mu2 {
            return Err(Error::InvalidParameter("identical means give zero divergence".into()));
        }
        let kl = (mu1 - mu2).powi(2) / (2.0 * var);
        Ok(Self { kind: ModelKind::GaussianPair { mu1, mu2, var }, kl12: kl, kl21: kl })
    }

    pub fn discrete(pmf1: Vec<f64>, pmf2: Vec<f64>) -> Result<Self> {
        Density::discrete(pmf1.clone())?;
        Density::discrete(pmf2.clone())?;
        if pmf1.len() != pmf2.len() {
            return Err(Error::InvalidParameter("alphabets differ in size".into()));
        }
        if pmf1.iter().zip(&pmf2).any(|(a, b)| (*a > 0.0) != (*b > 0.0)) {
            return Err(Error::InvalidParameter(
                "distributions are not mutually absolutely continuous".into(),
            ));
        }
        let kl12 = discrete_kl(&pmf1, &pmf2);
        let kl21 = discrete_kl(&pmf2, &pmf1);
        if !(kl12 > 0.0 && kl21 > 0.0) {
            return Err(Error::InvalidParameter("divergence must be strictly positive".into()));
        }
        Ok(Self { kind: ModelKind::DiscretePair { pmf1, pmf2 }, kl12, kl21 })
    }

    /// Pairs two densities of the same family (Gaussians must share a variance).
    pub fn from_densities(p1: &Density, p2: &Density) -> Result<Self> {
        match (p1, p2) {
            (Density::Gaussian { mean: m1, var: v1 }, Density::Gaussian { mean: m2, var: v2 }) => {
                if v1 != v2 {
                    return Err(Error::InvalidParameter(
                        "Gaussian pairs must share a common variance".into(),
                    ));
                }
                Self::gaussian(*m1, *m2, *v1)
            }
            (Density::Discrete { pmf: a }, Density::Discrete { pmf: b }) => {
                Self::discrete(a.clone(), b.clone())
            }
            _ => Err(Error::InvalidParameter("cannot pair densities of different families".into())),
        }
    }

    /// Reads a probability table: one `symbol p1 p2` row per symbol, with
    /// symbols covering `0..k`. `#` comments and blank lines are skipped.
    pub fn read_probability_table<R: BufRead>(reader: R) -> Result<Self> {
        let mut rows = BTreeMap::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = || Error::Parse { line: idx + 1, msg: format!("expected `symbol p1 p2`, got `{line}`") };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(parse_err());
            }
            let sym: usize = fields[0].parse().map_err(|_| parse_err())?;
            let p1: f64 = fields[1].parse().map_err(|_| parse_err())?;
            let p2: f64 = fields[2].parse().map_err(|_| parse_err())?;
            if rows.insert(sym, (p1, p2)).is_some() {
                return Err(Error::Parse { line: idx + 1, msg: format!("duplicate symbol {sym}") });
            }
        }
        if rows.keys().enumerate().any(|(i, &s)| i != s) {
            return Err(Error::Parse { line: 0, msg: "symbols must be exactly 0..k".into() });
        }
        let (pmf1, pmf2) = rows.into_values().unzip();
        Self::discrete(pmf1, pmf2)
    }

    pub fn kind(&self) -> &ModelKind {
        &self.kind
    }

    pub fn density(&self, h: Hypothesis) -> Density {
        match (&self.kind, h) {
            (ModelKind::GaussianPair { mu1, var, .. }, Hypothesis::H1) => Density::Gaussian { mean: *mu1, var: *var },
            (ModelKind::GaussianPair { mu2, var, .. }, Hypothesis::H2) => Density::Gaussian { mean: *mu2, var: *var },
            (ModelKind::DiscretePair { pmf1, .. }, Hypothesis::H1) => Density::Discrete { pmf: pmf1.clone() },
            (ModelKind::DiscretePair { pmf2, .. }, Hypothesis::H2) => Density::Discrete { pmf: pmf2.clone() },
        }
    }

    pub fn alphabet_size(&self) -> Option<usize> {
        match &self.kind {
            ModelKind::DiscretePair { pmf1, .. } => Some(pmf1.len()),
            ModelKind::GaussianPair { .. } => None,
        }
    }

    /// Log-likelihood ratio `ln p₁(y)/p₂(y)`.
    pub fn llr(&self, y: Observation) -> Result<f64> {
        match (&self.kind, y) {
            (ModelKind::GaussianPair { mu1, mu2, var }, Observation::Real(v)) => {
                if !v.is_finite() {
                    return Err(Error::InvalidInput(format!("non-finite observation {v}")));
                }
                Ok((mu1 - mu2) * (2.0 * v - mu1 - mu2) / (2.0 * var))
            }
            (ModelKind::DiscretePair { pmf1, pmf2 }, Observation::Symbol(s)) => {
                match (pmf1.get(s), pmf2.get(s)) {
                    (Some(&a), Some(&b)) if a > 0.0 => Ok((a / b).ln()),
                    _ => Err(Error::InvalidInput(format!("symbol {s} outside the support"))),
                }
            }
            _ => Err(Error::InvalidInput("observation type does not match the model".into())),
        }
    }

    /// i.i.d. draws under hypothesis `h`.
    pub fn sample<R: Rng + ?Sized>(&self, h: Hypothesis, count: usize, rng: &mut R) -> Result<Vec<Observation>> {
        self.density(h).sample(count, rng)
    }

    /// Relative entropy in nats.
    pub fn kl(&self, direction: Direction) -> f64 {
        match direction {
            Direction::OneToTwo => self.kl12,
            Direction::TwoToOne => self.kl21,
        }
    }

    /// `D(P₁‖P₂)`
    pub fn kl12(&self) -> f64 {
        self.kl12
    }

    /// `D(P₂‖P₁)`
    pub fn kl21(&self) -> f64 {
        self.kl21
    }

    /// Log moment generating function of the LLR under `P₁`, evaluated at
    /// `−λ`.
    pub fn log_mgf(&self, lambda: f64) -> Result<f64> {
        if !lambda.is_finite() {
            return Err(Error::InvalidInput(format!("non-finite λ {lambda}")));
        }
        Ok(self.log_mgf_unchecked(lambda))
    }

    fn log_mgf_unchecked(&self, lambda: f64) -> f64 {
        match &self.kind {
            ModelKind::GaussianPair { mu1, mu2, var } => {
                let v = (mu1 - mu2).powi(2) / var;
                -lambda * self.kl12 + lambda * lambda * v / 2.0
            }
            ModelKind::DiscretePair { pmf1, pmf2 } => log_sum_exp(
                pmf1.iter()
                    .zip(pmf2)
                    .filter(|(a, _)| **a > 0.0)
                    .map(|(a, b)| (1.0 - lambda) * a.ln() + lambda * b.ln()),
            ),
        }
    }

    /// Fenchel–Legendre transform `Λ*(τ)` for `τ > −D(P₁‖P₂)`.
    ///
    /// Computed numerically for every model. Returns `+∞` when the supremum
    /// is not attained at a finite λ (possible for discrete models when τ
    /// lies beyond the range of the LLR).
    pub fn rate_function(&self, tau: f64) -> Result<f64> {
        if !tau.is_finite() {
            return Err(Error::InvalidInput(format!("non-finite τ {tau}")));
        }
        if tau <= -self.kl12 {
            return Err(Error::OutOfDomain(format!(
                "τ = {tau} must exceed −D(P₁‖P₂) = {}",
                -self.kl12
            )));
        }
        Ok(self.rate_sup(tau).map_or(f64::INFINITY, |(_, v)| v))
    }

    /// Maximizer λ of `λτ − Λ(λ)`, if finite.
    pub fn rate_argmax(&self, tau: f64) -> Option<f64> {
        self.rate_sup(tau).map(|(l, _)| l)
    }

    fn rate_sup(&self, tau: f64) -> Option<(f64, f64)> {
        concave_sup(|l| l * tau - self.log_mgf_unchecked(l), -1.0, 2.0, 1e8, 1e-13)
    }

    /// Chernoff information, computed as `Λ*(0)`.
    pub fn chernoff(&self) -> f64 {
        self.rate_function(0.0).expect("0 > −D(P₁‖P₂) for a valid model")
    }

    /// Chernoff information from its defining minimization over `[0, 1]`,
    /// evaluating `ln ∫ p₁^λ p₂^{1−λ}` directly (quadrature for Gaussians).
    /// Returns `(C, λ*)`.
    pub fn chernoff_direct(&self) -> (f64, f64) {
        let (lambda, neg) = golden_max(|l| -self.log_affinity(l), 0.0, 1.0, 1e-13);
        (neg, lambda)
    }

    /// `ln ∫ p₁(y)^λ p₂(y)^{1−λ} dy`.
    pub fn log_affinity(&self, lambda: f64) -> f64 {
        match &self.kind {
            ModelKind::DiscretePair { pmf1, pmf2 } => pmf1
                .iter()
                .zip(pmf2)
                .filter(|(a, _)| **a > 0.0)
                .map(|(a, b)| a.powf(lambda) * b.powf(1.0 - lambda))
                .sum::<f64>()
                .ln(),
            ModelKind::GaussianPair { mu1, mu2, var } => {
                let sd = var.sqrt();
                let lo = mu1.min(*mu2) - 14.0 * sd;
                let hi = mu1.max(*mu2) + 14.0 * sd;
                let pdf = |m: f64, y: f64| (-(y - m) * (y - m) / (2.0 * var)).exp() / (2.0 * PI * var).sqrt();
                simpson(|y| pdf(*mu1, y).powf(lambda) * pdf(*mu2, y).powf(1.0 - lambda), lo, hi, 20_000).ln()
            }
        }
    }

    /// Mean and variance of the LLR of one observation under `h`, when the
    /// LLR is Gaussian (Gaussian pairs only).
    pub fn gaussian_llr_moments(&self, h: Hypothesis) -> Option<(f64, f64)> {
        match self.kind {
            ModelKind::GaussianPair { mu1, mu2, var } => {
                let v = (mu1 - mu2).powi(2) / var;
                Some(match h {
                    Hypothesis::H1 => (self.kl12, v),
                    Hypothesis::H2 => (-self.kl21, v),
                })
            }
            ModelKind::DiscretePair { .. } => None,
        }
    }
}

fn discrete_kl(p: &[f64], q: &[f64]) -> f64 {
    p.iter().zip(q).filter(|(a, _)| **a > 0.0).map(|(a, b)| a * (a / b).ln()).sum()
}

fn log_sum_exp(terms: impl Iterator<Item = f64> + Clone) -> f64 {
    let max = terms.clone().fold(f64::NEG_INFINITY, f64::max);
    max + terms.map(|t| (t - max).exp()).sum::<f64>().ln()
}

fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, intervals: usize) -> f64 {
    let n = intervals + intervals % 2;
    let h = (b - a) / n as f64;
    let inner: f64 = (1..n).map(|k| f(a + k as f64 * h) * if k % 2 == 1 { 4.0 } else { 2.0 }).sum();
    (f(a) + f(b) + inner) * h / 3.0
}
