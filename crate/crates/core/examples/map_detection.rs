//! Minimum-error detection of N(1, 10) versus N(-1, 10) on a star network,
//! compared with the optimal centralized error probability. Uses the
//! two-stage step size: 1/(4m) first, the strict value after a cycle.

use onebit_detect::experiments::{monte_carlo, CriterionSetup, MonteCarloConfig, Topology};
use onebit_detect::models::HypothesisModel;

fn main() -> onebit_detect::Result<()> {
    let model = HypothesisModel::gaussian(1.0, -1.0, 10.0)?;
    let trials = 4000;
    println!("{:>6} {:>4} {:>9} {:>11} {:>12} {:>7}", "pi1", "n", "adjusted", "empirical", "centralized", "cycles");
    for (pi1, adjusted) in [(0.5, false), (0.1, true), (0.1, false)] {
        for n in [10, 20, 40, 70] {
            let setup = CriterionSetup::Map { pi1, prior_adjusted: adjusted };
            let r = monte_carlo(&MonteCarloConfig::new(model.clone(), Topology::Star, n, setup, trials, 7))?;
            println!(
                "{pi1:>6} {n:>4} {adjusted:>9} {:>11.5} {:>12.5} {:>7}",
                r.empirical_pe,
                r.centralized_pe.unwrap_or(f64::NAN),
                r.cycle_count
            );
        }
    }
    Ok(())
}
