//! MAP detection among three Gaussian hypotheses by a pairwise tournament of
//! consensus runs.

use onebit_detect::consensus::RunConfig;
use onebit_detect::detect::CyclePolicy;
use onebit_detect::experiments::{multi_monte_carlo, MultiConfig, Topology};
use onebit_detect::models::Density;

fn main() -> onebit_detect::Result<()> {
    let models = [2.0, 0.0, -2.0].iter().map(|&mu| Density::gaussian(mu, 10.0)).collect::<Result<Vec<_>, _>>()?;
    for n in [10, 25, 50] {
        let cfg = MultiConfig {
            models: models.clone(),
            priors: vec![1.0 / 3.0; 3],
            topology: Topology::Star,
            n,
            trials: 1000,
            seed: 11,
            rho: None,
            cycle_policy: CyclePolicy::AcceptH1,
            run_config: RunConfig::default(),
        };
        let r = multi_monte_carlo(&cfg)?;
        println!(
            "n={n:>3} correct={:.3} decided={}/{} consensus runs per trial={:?}",
            r.correct_rate, r.decided, r.trials, r.runs_per_trial
        );
    }
    Ok(())
}
