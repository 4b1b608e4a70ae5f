//! One consensus run on a star network, printing the per-iteration quantized
//! outputs and the terminal regime.

use onebit_detect::consensus::{check_consensus_bounds, run_observed, ConsensusState, RunConfig, Termination};
use onebit_detect::graph::Graph;
use onebit_detect::quantizer::DeltaQuantizer;

fn main() -> onebit_detect::Result<()> {
    let graph = Graph::star(6)?;
    let data = [0.9, -0.4, 0.3, 0.05, 0.6, -0.2];
    let quantizer = DeltaQuantizer::new(-1.0, 2.0, 1.0)?;
    let rho = 1.0 / (4.0 * graph.edge_count() as f64);

    let state = ConsensusState::new(&graph, &data, quantizer, rho)?;
    println!("data mean = {:.4}, threshold = {}", state.data_mean(), quantizer.threshold());

    let outcome = run_observed(state, &graph, &RunConfig::default(), |s| {
        let bits: String = s.quantized().iter().map(|&q| if q > 0.0 { '1' } else { '0' }).collect();
        println!("k={:>3}  Q(x)={bits}  sum(alpha)={:+.1e}", s.iteration(), s.dual_sum());
    })?;

    match &outcome.termination {
        Termination::Converged { level } => {
            println!("converged to {level:?} ({}) after {} iterations", quantizer.value(*level), outcome.iterations)
        }
        Termination::Cycled(c) => println!("cycle of period {} entered at {}", c.period, c.entered_at),
        Termination::Exhausted => println!("no terminal regime within the iteration cap"),
    }
    let report = check_consensus_bounds(&outcome, &graph)?;
    println!("error bound holds: {} (slack {:.4})", report.holds(), report.slack());
    Ok(())
}
