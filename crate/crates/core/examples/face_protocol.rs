//! The image-database protocol: 26 subset sizes from 100 to all points, 25
//! trials each, fit only above 500, entropy in bits. Reads a CSV with one
//! image per row, or uses a 585 x 4096 stand-in when no path is given.
//!
//!     cargo run --release --example face_protocol -- [faces.csv] [curve.csv]

use gmst::datasets::{generate, load_csv, ManifoldKind, SyntheticSpec};
use gmst::estimator::{linear_sizes, run_pipeline, BetaSource, FitWindow, LogBase, PipelineConfig, ResamplingPlan};
use gmst::NeighborRule;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let cloud = match args.next() {
        Some(path) => load_csv(path, b',')?,
        None => generate(&SyntheticSpec::new(ManifoldKind::Hyperplane, 6, 4096, 585, 9))?.cloud,
    };
    println!("{} points in {} dimensions", cloud.len(), cloud.dim());

    let plan = ResamplingPlan::new(linear_sizes(100, cloud.len(), 26)?, 25, 0)
        .with_fit_window(FitWindow::Above { above: 500 });
    let config = PipelineConfig::new(NeighborRule::Knn(7), plan)
        .with_beta(BetaSource::Approx)
        .with_log_base(LogBase::Bits);
    let report = run_pipeline(&cloud, &config)?;
    println!("fit on sizes {:?}", report.fit.sizes);
    println!("m_hat = {}  H = {:.1} bits", report.m_hat, report.entropy);
    if let Some(path) = args.next() {
        report.curve.write_trials_csv(&mut std::fs::File::create(&path)?)?;
        println!("wrote {path}");
    }
    Ok(())
}
