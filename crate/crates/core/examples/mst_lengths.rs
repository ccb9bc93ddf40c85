//! Power-weighted MST lengths: the dense solver, Kruskal on an edge list and
//! brute force over every labeled tree all agree.

use gmst::matrix::{DenseMatrix, EuclideanView};
use gmst::mst::{gmst_length, gmst_length_disk, kruskal, mst_oracle};
use gmst::neighborhood::Edge;
use gmst::PointCloud;
use rand::{Rng, SeedableRng};

fn main() -> gmst::Result<()> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
    let p = 7;
    let cloud = PointCloud::new(p, 2, (0..2 * p).map(|_| rng.gen::<f64>()).collect())?;
    let w = DenseMatrix::euclidean(&cloud);
    let edges: Vec<Edge> = (0..p).flat_map(|i| (i + 1..p).map(move |j| (i, j))).map(|(i, j)| Edge::new(i, j, w.row(i)[j])).collect();

    println!("{:>6} {:>12} {:>12} {:>12}", "gamma", "dense", "kruskal", "all trees");
    for gamma in [0.5, 1.0, 2.0] {
        println!(
            "{gamma:>6} {:>12.9} {:>12.9} {:>12.9}",
            gmst_length(&w, gamma)?.total_length,
            kruskal(p, edges.clone(), gamma)?.total_length,
            mst_oracle(&w, gamma)?.total_length
        );
    }
    let tree = gmst_length(&w, 1.0)?;
    println!("\ntree edges:");
    for e in &tree.edges {
        println!("  {} - {}  {:.4}", e.i, e.j, e.weight);
    }

    let n = 3000;
    let big = PointCloud::new(n, 2, (0..2 * n).map(|_| rng.gen::<f64>()).collect())?;
    let dense = gmst_length(&EuclideanView(&big), 1.0)?.total_length;
    let disk = gmst_length_disk(&EuclideanView(&big), 1.0, 0.05)?.total_length;
    println!("\nn = {n} uniform points: L = {dense:.4}, disk-restricted L = {disk:.4}, L / sqrt(n) = {:.4}", dense / (n as f64).sqrt());
    Ok(())
}
