//! Fixed-sample test with threshold tau* on the LLR mean. The probability of
//! accepting H1 is bracketed by the Gaussian tail of the LLR mean evaluated at
//! tau* + 4 rho m / n and at tau* - 12 rho n.

use onebit_detect::detect::RhoStrategy;
use onebit_detect::experiments::{monte_carlo_records, qfunc, CriterionSetup, HypothesisDraw, MonteCarloConfig, Topology};
use onebit_detect::models::{Hypothesis, HypothesisModel};

fn main() -> onebit_detect::Result<()> {
    let model = HypothesisModel::gaussian(1.0, -1.0, 10.0)?;
    let (n, tau_star, rho) = (20usize, 0.0, 0.001);
    let m = (n - 1) as f64;
    let setup = CriterionSetup::FiniteN { tau_star, rho };
    for h in [Hypothesis::H1, Hypothesis::H2] {
        let mut cfg = MonteCarloConfig::new(model.clone(), Topology::Star, n, setup, 4000, 5);
        cfg.strategy = RhoStrategy::Strict;
        cfg.hypotheses = HypothesisDraw::Always(h);
        let (_, records) = monte_carlo_records(&cfg)?;
        let accepted = records.iter().filter(|r| r.decision == Some(Hypothesis::H1)).count() as f64 / records.len() as f64;
        let (mean, var) = model.gaussian_llr_moments(h).expect("Gaussian model");
        let sd = (var / n as f64).sqrt();
        let tail = |t: f64| qfunc((t - mean) / sd);
        println!(
            "{h:?}: P(accept H1) = {accepted:.4} within [{:.4}, {:.4}]",
            tail(tau_star + 4.0 * rho * m / n as f64),
            tail(tau_star - 12.0 * rho * n as f64)
        );
    }
    Ok(())
}
