//! Builds k-NN and epsilon graphs on a swiss roll and shows what conformal
//! rescaling does to the edge weights.

use gmst::datasets::{generate, ManifoldKind, SyntheticSpec};
use gmst::neighborhood::{build_graph, NeighborRule, NeighborhoodGraph};

fn summary(label: &str, g: &NeighborhoodGraph) {
    let degrees = g.degrees();
    let w: Vec<f64> = g.edges().iter().map(|e| e.weight).collect();
    let mean = w.iter().sum::<f64>() / w.len() as f64;
    let max = w.iter().cloned().fold(0.0, f64::max);
    println!(
        "{label:<22} edges {:>6}  degree {}..{}  mean weight {mean:.4}  max weight {max:.4}",
        g.edges().len(),
        degrees.iter().min().unwrap(),
        degrees.iter().max().unwrap()
    );
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sample = generate(&SyntheticSpec::new(ManifoldKind::SwissRoll, 2, 3, 1500, 3))?;
    for k in [4, 7, 12] {
        summary(&format!("knn({k})"), &build_graph(&sample.cloud, NeighborRule::Knn(k))?);
    }
    summary("epsilon(1.5)", &build_graph(&sample.cloud, NeighborRule::Epsilon(1.5))?);

    let graph = build_graph(&sample.cloud, NeighborRule::Knn(7))?;
    let rescaled = graph.rescale_conformal()?;
    summary("knn(7), conformal", &rescaled);

    let doubled = build_graph(&sample.cloud.scaled(2.0)?, NeighborRule::Knn(7))?.rescale_conformal()?;
    println!("conformal weights unchanged by scaling the cloud by 2: {}", doubled.edges() == rescaled.edges());

    let mut head = Vec::new();
    graph.write_edges_csv(&mut head)?;
    println!("\nfirst edges of knn(7):");
    String::from_utf8_lossy(&head).lines().take(5).for_each(|l| println!("  {l}"));
    Ok(())
}
