//! Full estimation run on a swiss roll: dimension, entropy and the report.

use gmst::datasets::{generate, ManifoldKind, SyntheticSpec};
use gmst::estimator::{linear_sizes, run_pipeline, DataSource, PipelineConfig, ResamplingPlan};
use gmst::NeighborRule;

fn main() -> gmst::Result<()> {
    let spec = SyntheticSpec::new(ManifoldKind::SwissRoll, 2, 3, 1000, 1);
    let sample = generate(&spec)?;
    let plan = ResamplingPlan::new(linear_sizes(100, 1000, 10)?, 20, 1);
    let config = PipelineConfig::new(NeighborRule::Knn(7), plan).with_input(DataSource::Synthetic { spec: spec.clone() });
    let report = run_pipeline(&sample.cloud, &config)?;

    println!("{:>6} {:>10} {:>8}", "p", "mean L", "std");
    for e in &report.curve.entries {
        println!("{:>6} {:>10.3} {:>8.3}", e.size, e.mean_length, e.std_length);
    }
    println!();
    println!("slope a = {:.4}, intercept b = {:.4} (fit on {:?})", report.fit.a_hat, report.fit.b_hat, report.fit.sizes);
    println!("m_hat = {} ({:.3} before rounding)", report.m_hat, report.m_continuous);
    println!(
        "H_alpha = {:.3} nats, alpha = {}, true value log(area) = {:.3}",
        report.entropy,
        report.alpha,
        spec.ground_truth_entropy().unwrap()
    );
    for w in &report.warnings {
        println!("warning: {w}");
    }
    Ok(())
}
