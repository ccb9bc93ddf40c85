//! A conformally embedded disk (the "fishbowl") estimated with and without
//! C-ISOMAP rescaling of the neighborhood graph.

use gmst::datasets::{generate, ManifoldKind, SyntheticSpec};
use gmst::estimator::{linear_sizes, run_pipeline, PipelineConfig, ResamplingPlan};
use gmst::NeighborRule;

fn main() -> gmst::Result<()> {
    for seed in 1..=3 {
        let sample = generate(&SyntheticSpec::new(ManifoldKind::ConformalFishbowl, 2, 3, 1000, seed))?;
        let plan = ResamplingPlan::new(linear_sizes(100, 1000, 10)?, 20, seed);
        for conformal in [false, true] {
            let config = PipelineConfig::new(NeighborRule::Knn(7), plan.clone()).with_conformal(conformal);
            let report = run_pipeline(&sample.cloud, &config)?;
            println!(
                "seed {seed} conformal={conformal:<5}  a = {:.4}  m_hat = {}  H = {:.3} nats",
                report.fit.a_hat, report.m_hat, report.entropy
            );
        }
    }
    Ok(())
}
