//! Compares graph geodesics on a swiss roll with the true surface distance and
//! the straight-line distance through the ambient space.

use gmst::datasets::{generate, ManifoldKind, SyntheticSpec};
use gmst::geodesics::all_pairs_geodesics;
use gmst::neighborhood::{build_graph, NeighborRule};
use rand::{Rng, SeedableRng};

fn main() -> gmst::Result<()> {
    let n = 1500;
    let sample = generate(&SyntheticSpec::new(ManifoldKind::SwissRoll, 2, 3, n, 7))?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    for k in [7, 12, 20] {
        let geo = all_pairs_geodesics(&build_graph(&sample.cloud, NeighborRule::Knn(k))?);
        let mut errors: Vec<f64> = (0..500)
            .filter_map(|_| {
                let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
                if i == j {
                    return None;
                }
                let truth = sample.analytic_geodesic(i, j)?;
                Some((geo.get(i, j)? - truth) / truth)
            })
            .collect();
        errors.sort_by(f64::total_cmp);
        let within = errors.iter().filter(|e| e.abs() <= 0.05).count() as f64 / errors.len() as f64;
        println!(
            "knn({k:>2}): components {}  median relative error {:+.3}  within 5%: {:.0}%",
            geo.component_count(),
            errors[errors.len() / 2],
            100.0 * within
        );
    }

    let geo = all_pairs_geodesics(&build_graph(&sample.cloud, NeighborRule::Knn(7))?);
    println!("\n{:>5} {:>5} {:>10} {:>10} {:>10}", "i", "j", "euclidean", "graph", "surface");
    for _ in 0..8 {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        println!(
            "{i:>5} {j:>5} {:>10.3} {:>10.3} {:>10.3}",
            sample.cloud.distance(i, j),
            geo.get(i, j).unwrap_or(f64::INFINITY),
            sample.analytic_geodesic(i, j).unwrap()
        );
    }
    Ok(())
}
