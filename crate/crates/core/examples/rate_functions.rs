//! Relative entropies, the log-MGF of the LLR, its Legendre transform and
//! the Chernoff information, for a Gaussian pair and a discrete pair.

use onebit_detect::detect::tau_from_gamma;
use onebit_detect::models::HypothesisModel;

fn describe(name: &str, model: &HypothesisModel) -> onebit_detect::Result<()> {
    println!("== {name}");
    println!("D(P1||P2) = {:.6}   D(P2||P1) = {:.6}", model.kl12(), model.kl21());
    for lambda in [0.0, 0.25, 0.5, 0.75, 1.0] {
        println!("  Lambda({lambda:.2}) = {:+.6}", model.log_mgf(lambda)?);
    }
    let lo = -model.kl12();
    for k in 1..=5 {
        let tau = lo + k as f64 * (model.kl21() - lo) / 5.0;
        println!("  Lambda*({tau:+.4}) = {:.6}", model.rate_function(tau)?);
    }
    let (direct, lambda) = model.chernoff_direct();
    println!("Chernoff information: {:.8} (direct {:.8} at lambda = {lambda:.4})", model.chernoff(), direct);
    let gamma = 0.5 * model.rate_function(model.kl21())?;
    println!("smallest tau with Lambda*(tau) = {gamma:.4}: {:.6}", tau_from_gamma(model, gamma)?);
    Ok(())
}

fn main() -> onebit_detect::Result<()> {
    describe("N(1, 10) vs N(-1, 10)", &HypothesisModel::gaussian(1.0, -1.0, 10.0)?)?;
    describe(
        "discrete (0.7, 0.2, 0.1) vs (0.1, 0.3, 0.6)",
        &HypothesisModel::discrete(vec![0.7, 0.2, 0.1], vec![0.1, 0.3, 0.6])?,
    )?;
    Ok(())
}
