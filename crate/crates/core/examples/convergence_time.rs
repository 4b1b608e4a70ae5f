//! Mean iterations to convergence for star, complete and random networks,
//! with a fixed step size 1/(4m) and with the decreasing schedule.

use onebit_detect::consensus::RunConfig;
use onebit_detect::experiments::{convergence_time_sweep, Schedule, TimeSweepConfig, Topology};
use onebit_detect::models::HypothesisModel;

fn main() -> onebit_detect::Result<()> {
    for schedule in [Schedule::Fixed, Schedule::Decreasing] {
        let cfg = TimeSweepConfig {
            model: HypothesisModel::gaussian(1.0, -1.0, 10.0)?,
            pi1: 0.5,
            topologies: vec![Topology::Star, Topology::Complete, Topology::RandomDensity(0.3)],
            n_values: vec![10, 20, 40, 80],
            trials: 300,
            seed: 3,
            schedule,
            run_config: RunConfig::default(),
        };
        println!("== {schedule:?}");
        for r in convergence_time_sweep(&cfg)? {
            let scale = r.n as f64 * (r.n as f64).ln();
            println!(
                "{:<11} n={:>3} m={:>4} mean={:>7.1} mean/(n ln n)={:.3} warm-up={} cycled={}",
                r.topology, r.n, r.m, r.mean_convergence_time, r.mean_convergence_time / scale, r.warmup_iterations, r.cycled
            );
        }
    }
    Ok(())
}
