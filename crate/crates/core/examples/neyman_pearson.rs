//! Neyman-Pearson detection with a constant type-I constraint (offset from
//! the type-based test on a finite alphabet) and with an exponential
//! type-I constraint.

use onebit_detect::detect::{hoeffding_delta, tau_from_gamma};
use onebit_detect::experiments::{monte_carlo, CriterionSetup, DeltaChoice, MonteCarloConfig, Topology};
use onebit_detect::models::HypothesisModel;

fn main() -> onebit_detect::Result<()> {
    let discrete = HypothesisModel::discrete(vec![0.6, 0.3, 0.1], vec![0.2, 0.3, 0.5])?;
    println!("constant constraint, alphabet of 3, D(P1||P2) = {:.4}", discrete.kl12());
    for n in [10, 30, 60] {
        let delta = hoeffding_delta(3, n, discrete.kl12())?;
        let setup = CriterionSetup::NpConstant { delta: DeltaChoice::Hoeffding };
        let r = monte_carlo(&MonteCarloConfig::new(discrete.clone(), Topology::RandomDensity(0.3), n, setup, 1000, 1))?;
        println!("  n={n:>3} delta={delta:.4} alpha={:.4} beta={:.4}", r.empirical_alpha, r.empirical_beta);
    }

    let gauss = HypothesisModel::gaussian(1.0, -1.0, 10.0)?;
    let gamma = 0.02;
    let tau = tau_from_gamma(&gauss, gamma)?;
    println!("exponential constraint gamma={gamma}: threshold -tau = {:.5}", -tau);
    for n in [10, 30, 60] {
        let setup = CriterionSetup::NpExponential { tau };
        let r = monte_carlo(&MonteCarloConfig::new(gauss.clone(), Topology::Complete, n, setup, 1000, 2))?;
        println!(
            "  n={n:>3} alpha={:.4} (-ln/n {:.4}) beta={:.4} (-ln/n {:.4})",
            r.empirical_alpha,
            -r.empirical_alpha.ln() / n as f64,
            r.empirical_beta,
            -r.empirical_beta.ln() / n as f64
        );
    }
    Ok(())
}
