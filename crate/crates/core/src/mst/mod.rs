//! Power-weighted minimal spanning tree length `L_gamma = min_T sum_{e in T} |e|^gamma`.
//!
//! Since `x -> x^gamma` is increasing for `gamma > 0`, the minimizing tree is
//! the ordinary MST of the raw weights; the exponent is applied afterwards.

mod beta;
mod oracle;
mod union_find;

pub use beta::{estimate_beta, BetaEstimate, BetaTable};
pub use oracle::{mst_oracle, prufer_decode, ORACLE_MAX_VERTICES};
pub use union_find::UnionFind;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::EdgeWeights;
use crate::neighborhood::Edge;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MstResult {
    /// Sum of `weight^gamma` over the tree edges.
    pub total_length: f64,
    pub gamma: f64,
    /// Tree edges with their raw (un-exponentiated) weights.
    pub edges: Vec<Edge>,
    pub vertex_count: usize,
}

pub(crate) fn check_gamma(gamma: f64) -> Result<()> {
    if gamma.is_finite() && gamma > 0.0 {
        Ok(())
    } else {
        Err(Error::Config(format!("edge exponent gamma must be positive, got {gamma}")))
    }
}

/// Orders edges by `(weight, i, j)` and sums `weight^gamma` in that order.
fn finish(mut edges: Vec<Edge>, gamma: f64, vertex_count: usize) -> MstResult {
    edges.sort_by(edge_order);
    let total_length = if gamma == 1.0 {
        edges.iter().map(|e| e.weight).sum()
    } else {
        edges.iter().map(|e| e.weight.powf(gamma)).sum()
    };
    MstResult {
        total_length,
        gamma,
        edges,
        vertex_count,
    }
}

fn edge_order(a: &Edge, b: &Edge) -> std::cmp::Ordering {
    a.weight
        .total_cmp(&b.weight)
        .then(a.i.cmp(&b.i))
        .then(a.j.cmp(&b.j))
}

fn disconnected<W: EdgeWeights + ?Sized>(weights: &W) -> Error {
    let p = weights.order();
    let mut uf = UnionFind::new(p);
    for i in 0..p {
        for j in 0..i {
            if weights.weight(i, j).is_finite() {
                uf.union(i, j);
            }
        }
    }
    Error::Disconnected {
        components: uf.set_count(),
        largest: uf.largest_set(),
        total: p,
    }
}

/// Power-weighted MST length over a dense symmetric edge matrix.
///
/// Dense Prim in `O(p^2)`; ties go to the smaller vertex index.
pub fn gmst_length<W: EdgeWeights + ?Sized>(weights: &W, gamma: f64) -> Result<MstResult> {
    check_gamma(gamma)?;
    let p = weights.order();
    if p < 2 {
        return Err(Error::Input(format!("need at least 2 vertices, got {p}")));
    }
    // remaining[k] is a vertex outside the tree; best[k]/parent[k] its cheapest link
    let mut remaining: Vec<usize> = (1..p).collect();
    let mut best: Vec<f64> = remaining.iter().map(|&v| weights.weight(0, v)).collect();
    let mut parent = vec![0usize; p - 1];
    let mut edges = Vec::with_capacity(p - 1);

    while !remaining.is_empty() {
        let mut k = 0;
        for c in 1..remaining.len() {
            if best[c] < best[k] || (best[c] == best[k] && remaining[c] < remaining[k]) {
                k = c;
            }
        }
        let (v, w) = (remaining[k], best[k]);
        if !w.is_finite() {
            return Err(disconnected(weights));
        }
        edges.push(Edge::new(parent[k], v, w));
        remaining.swap_remove(k);
        best.swap_remove(k);
        parent.swap_remove(k);
        for c in 0..remaining.len() {
            let d = weights.weight(v, remaining[c]);
            if d < best[c] {
                best[c] = d;
                parent[c] = v;
            }
        }
    }
    Ok(finish(edges, gamma, p))
}

/// Kruskal over an explicit edge list on vertices `0..p`.
pub fn kruskal(p: usize, mut edges: Vec<Edge>, gamma: f64) -> Result<MstResult> {
    check_gamma(gamma)?;
    if p < 2 {
        return Err(Error::Input(format!("need at least 2 vertices, got {p}")));
    }
    edges.retain(|e| e.weight.is_finite());
    edges.sort_by(edge_order);
    let mut uf = UnionFind::new(p);
    let mut tree = Vec::with_capacity(p - 1);
    for e in edges {
        if uf.union(e.i, e.j) {
            tree.push(e);
            if tree.len() == p - 1 {
                break;
            }
        }
    }
    if tree.len() < p - 1 {
        return Err(Error::Disconnected {
            components: uf.set_count(),
            largest: uf.largest_set(),
            total: p,
        });
    }
    Ok(finish(tree, gamma, p))
}

/// MST restricted to candidate edges no longer than `radius`, falling back
/// to [`gmst_length`] when those edges do not span.
///
/// Exact: Kruskal over the full sorted edge list makes the same decisions on
/// every edge up to `radius`, and if those already span, nothing longer joins
/// the tree.
pub fn gmst_length_disk<W: EdgeWeights + ?Sized>(weights: &W, gamma: f64, radius: f64) -> Result<MstResult> {
    check_gamma(gamma)?;
    let p = weights.order();
    let mut candidates = Vec::new();
    for i in 0..p {
        for j in i + 1..p {
            let w = weights.weight(i, j);
            if w <= radius {
                candidates.push(Edge { i, j, weight: w });
            }
        }
    }
    match kruskal(p, candidates, gamma) {
        Err(Error::Disconnected { .. }) => gmst_length(weights, gamma),
        other => other,
    }
}

/// Checks that `edges` form a spanning tree on `p` vertices.
pub fn is_spanning_tree(p: usize, edges: &[Edge]) -> bool {
    if p == 0 || edges.len() != p - 1 {
        return false;
    }
    let mut uf = UnionFind::new(p);
    edges.iter().all(|e| e.i < p && e.j < p && uf.union(e.i, e.j)) && uf.set_count() == 1
}
