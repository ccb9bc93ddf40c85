use super::{check_gamma, MstResult};
use crate::error::{Error, Result};
use crate::matrix::EdgeWeights;
use crate::neighborhood::Edge;

/// Largest vertex count accepted by [`mst_oracle`] (8^6 = 262144 trees).
pub const ORACLE_MAX_VERTICES: usize = 8;

/// Decodes a Prufer sequence over `0..p` into the `p - 1` edges of its tree.
pub fn prufer_decode(seq: &[usize], p: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; p];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(p - 1);
    for &s in seq {
        let leaf = (0..p).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..p).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Exhaustive minimum of `sum w(e)^gamma` over all `p^(p-2)` labeled spanning trees.
pub fn mst_oracle<W: EdgeWeights + ?Sized>(weights: &W, gamma: f64) -> Result<MstResult> {
    check_gamma(gamma)?;
    let p = weights.order();
    if p < 2 {
        return Err(Error::Input(format!("need at least 2 vertices, got {p}")));
    }
    if p > ORACLE_MAX_VERTICES {
        return Err(Error::Config(format!(
            "exhaustive oracle refuses p = {p} > {ORACLE_MAX_VERTICES}"
        )));
    }
    for i in 0..p {
        for j in 0..i {
            if !weights.weight(i, j).is_finite() {
                return Err(Error::Input(format!("entry ({i}, {j}) is not finite")));
            }
        }
    }

    let mut best: Option<(f64, Vec<(usize, usize)>)> = None;
    let mut seq = vec![0usize; p - 2];
    loop {
        let tree = prufer_decode(&seq, p);
        let length: f64 = tree.iter().map(|&(a, b)| weights.weight(a, b).powf(gamma)).sum();
        if best.as_ref().map_or(true, |(b, _)| length < *b) {
            best = Some((length, tree));
        }
        // odometer increment over p^(p-2) sequences
        let mut k = 0;
        while k < seq.len() {
            seq[k] += 1;
            if seq[k] < p {
                break;
            }
            seq[k] = 0;
            k += 1;
        }
        if k == seq.len() {
            break;
        }
    }
    let (total_length, tree) = best.expect("at least one spanning tree");
    Ok(MstResult {
        total_length,
        gamma,
        edges: tree
            .into_iter()
            .map(|(a, b)| Edge::new(a, b, weights.weight(a, b)))
            .collect(),
        vertex_count: p,
    })
}
