//! Reference implementations shared by the integration tests. Nothing in here
//! calls into the crate's own algorithms, so agreement is meaningful.
#![allow(dead_code)]

use gmst::neighborhood::{Edge, NeighborRule, NeighborhoodGraph};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Dense O(n^3) shortest paths. Unreachable pairs stay at infinity.
pub fn floyd_warshall(n: usize, edges: &[(usize, usize, f64)]) -> Vec<Vec<f64>> {
    let mut d = vec![vec![f64::INFINITY; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0.0;
    }
    for &(i, j, w) in edges {
        if w < d[i][j] {
            d[i][j] = w;
            d[j][i] = w;
        }
    }
    for k in 0..n {
        for i in 0..n {
            let dik = d[i][k];
            if dik.is_infinite() {
                continue;
            }
            for j in 0..n {
                let via = dik + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Random undirected simple graph with roughly `mean_degree` edges per vertex.
/// With `integer_weights` every weight is a small integer, so all path sums are exact.
pub fn random_sparse_edges(rng: &mut ChaCha8Rng, n: usize, mean_degree: f64, integer_weights: bool) -> Vec<(usize, usize, f64)> {
    let p = (mean_degree / (n.max(2) - 1) as f64).min(1.0);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen::<f64>() < p {
                let w = if integer_weights {
                    rng.gen_range(1..=20) as f64
                } else {
                    rng.gen_range(0.01..3.0)
                };
                edges.push((i, j, w));
            }
        }
    }
    edges
}

pub fn to_graph(n: usize, edges: &[(usize, usize, f64)]) -> NeighborhoodGraph {
    NeighborhoodGraph::from_edges(n, edges.iter().map(|&(i, j, w)| Edge::new(i, j, w)), NeighborRule::Knn(1)).unwrap()
}

/// Ordinary least squares via the textbook sums-of-products formulas.
pub fn ols(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| x * y).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    let intercept = (sy - slope * sx) / n;
    (slope, intercept)
}

/// Random orthogonal d x d matrix (row-major) from Gram-Schmidt on Gaussian columns.
pub fn random_rotation(rng: &mut ChaCha8Rng, d: usize) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::new();
    while basis.len() < d {
        let mut v: Vec<f64> = (0..d).map(|_| rng.sample(rand_distr::StandardNormal)).collect();
        for _ in 0..2 {
            for b in &basis {
                let dot: f64 = v.iter().zip(b).map(|(x, y)| x * y).sum();
                v.iter_mut().zip(b).for_each(|(x, y)| *x -= dot * y);
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-6 {
            basis.push(v.into_iter().map(|x| x / norm).collect());
        }
    }
    basis
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}
