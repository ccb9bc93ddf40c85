//! Draws a sample from every synthetic manifold and writes it as CSV.
//!
//!     cargo run --release --example generate_manifolds -- [out_dir]

use gmst::datasets::{generate, save_csv, ManifoldKind, SyntheticSpec};

fn main() -> gmst::Result<()> {
    let out_dir = std::env::args().nth(1).unwrap_or_else(|| std::env::temp_dir().display().to_string());
    let specs = [
        SyntheticSpec::new(ManifoldKind::Hyperplane, 2, 3, 1000, 1),
        SyntheticSpec::new(ManifoldKind::Hypercube, 3, 5, 1000, 1),
        SyntheticSpec::new(ManifoldKind::SwissRoll, 2, 3, 1000, 1),
        SyntheticSpec::new(ManifoldKind::Sphere, 2, 3, 1000, 1),
        SyntheticSpec::new(ManifoldKind::ConformalFishbowl, 2, 3, 1000, 1),
    ];
    println!("{:<20} {:>3} {:>3} {:>6}  {:>14}  file", "kind", "m", "d", "n", "true entropy");
    for spec in specs {
        let sample = generate(&spec)?;
        let path = format!("{out_dir}/{}.csv", spec.kind);
        save_csv(&sample.cloud, &path, b',')?;
        let truth = spec.ground_truth_entropy().map_or("unknown".to_string(), |h| format!("{h:.4} nats"));
        println!(
            "{:<20} {:>3} {:>3} {:>6}  {:>14}  {path}",
            spec.kind.to_string(),
            spec.intrinsic_dim,
            spec.ambient_dim,
            spec.n,
            truth
        );
    }
    Ok(())
}
