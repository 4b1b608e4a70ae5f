//! Stress test of the consensus error bounds on random graphs and data,
//! including instances placed near the quantizer threshold so that some runs
//! end in cycles.

use onebit_detect::consensus::{check_consensus_bounds, run, BoundReport, RunConfig};
use onebit_detect::graph::Graph;
use onebit_detect::quantizer::DeltaQuantizer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> onebit_detect::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut converged, mut cycled, mut exhausted, mut violations) = (0, 0, 0, 0);
    let mut longest_period = 0;
    let mut tightest: f64 = f64::INFINITY;

    for instance in 0..400 {
        let n = rng.random_range(2..=30);
        let m = rng.random_range(n - 1..=n * (n - 1) / 2);
        let graph = Graph::random_connected(n, m, &mut rng)?;
        let width = rng.random_range(0.1..4.0);
        let a = rng.random_range(-2.0 * width..width);
        let q = DeltaQuantizer::new(a, width, rng.random_range(0.01..0.99) * width)?;
        let rho = 10f64.powf(rng.random_range(-3.0..0.0));
        let data: Vec<f64> = if instance % 2 == 0 {
            (0..n).map(|_| rng.random_range(-5.0 * width..5.0 * width)).collect()
        } else {
            // Centered on the threshold: the mean sits close to it.
            (0..n).map(|_| q.threshold() + rng.random_range(-width..width)).collect()
        };

        let outcome = run(&graph, &data, q, rho, &RunConfig::default())?;
        if outcome.is_exhausted() {
            exhausted += 1;
            continue;
        }
        let report = check_consensus_bounds(&outcome, &graph)?;
        match &report {
            BoundReport::Converged { .. } => converged += 1,
            BoundReport::Cycled { bound, .. } => {
                cycled += 1;
                longest_period = longest_period.max(bound.period);
            }
        }
        if !report.holds() {
            violations += 1;
        }
        tightest = tightest.min(report.slack());
    }

    println!("converged {converged}, cycled {cycled}, exhausted {exhausted}");
    println!("bound violations: {violations}");
    println!("longest cycle period: {longest_period}");
    println!("smallest bound slack: {tightest:.3e}");
    Ok(())
}
