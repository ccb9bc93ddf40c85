//! Euclidean neighborhood graphs (epsilon-rule / k-rule) and conformal edge rescaling.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::datasets::PointCloud;
use crate::error::{Error, Result};

/// How each point picks its neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NeighborRule {
    /// All points within the given Euclidean radius.
    Epsilon(f64),
    /// The `k` nearest points, symmetrized by union.
    Knn(usize),
}

impl NeighborRule {
    pub fn validate(&self, n: usize) -> Result<()> {
        match *self {
            NeighborRule::Epsilon(r) if !(r.is_finite() && r > 0.0) => {
                Err(Error::Config(format!("epsilon radius must be positive, got {r}")))
            }
            NeighborRule::Knn(k) if k == 0 || k >= n => Err(Error::Config(format!(
                "k must satisfy 1 <= k <= n - 1, got k = {k} with n = {n}"
            ))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for NeighborRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NeighborRule::Epsilon(r) => write!(f, "epsilon:{r}"),
            NeighborRule::Knn(k) => write!(f, "knn:{k}"),
        }
    }
}

impl FromStr for NeighborRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("cannot parse neighbor rule '{s}' (expected knn:K or epsilon:R)"));
        let (kind, value) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "knn" => value.parse().map(NeighborRule::Knn).map_err(|_| bad()),
            "epsilon" => value.parse().map(NeighborRule::Epsilon).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

/// Undirected weighted edge with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub weight: f64,
}

impl Edge {
    pub fn new(a: usize, b: usize, weight: f64) -> Self {
        Self {
            i: a.min(b),
            j: a.max(b),
            weight,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NeighborhoodGraph {
    n: usize,
    edges: Vec<Edge>,
    rule: NeighborRule,
    rescaled: bool,
    mean_neighbor_dist: Vec<f64>,
    zero_weight_edges: usize,
}

impl NeighborhoodGraph {
    /// Graph from an explicit edge list, mainly for tests and custom pipelines.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>, rule: NeighborRule) -> Result<Self> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        for e in &edges {
            if e.i >= e.j || e.j >= n {
                return Err(Error::Input(format!("invalid edge ({}, {}) for n = {n}", e.i, e.j)));
            }
            if !(e.weight.is_finite() && e.weight >= 0.0) {
                return Err(Error::Input(format!(
                    "edge ({}, {}) has invalid weight {}",
                    e.i, e.j, e.weight
                )));
            }
        }
        edges.sort_by(|a, b| (a.i, a.j).cmp(&(b.i, b.j)));
        if let Some(w) = edges.windows(2).find(|w| (w[0].i, w[0].j) == (w[1].i, w[1].j)) {
            return Err(Error::Input(format!("duplicate edge ({}, {})", w[0].i, w[0].j)));
        }
        let mean_neighbor_dist = mean_incident_weight(n, &edges);
        let zero_weight_edges = edges.iter().filter(|e| e.weight == 0.0).count();
        Ok(Self {
            n,
            edges,
            rule,
            rescaled: false,
            mean_neighbor_dist,
            zero_weight_edges,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges sorted by `(i, j)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn rule(&self) -> NeighborRule {
        self.rule
    }

    pub fn is_rescaled(&self) -> bool {
        self.rescaled
    }

    /// Mean Euclidean length of the edges incident to each vertex, `M(i)`.
    /// Always refers to the unrescaled weights; zero for isolated vertices.
    pub fn mean_neighbor_dist(&self) -> &[f64] {
        &self.mean_neighbor_dist
    }

    /// Number of edges joining coincident points.
    pub fn zero_weight_edges(&self) -> usize {
        self.zero_weight_edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.i] += 1;
            deg[e.j] += 1;
        }
        deg
    }

    /// Compressed adjacency: `(offsets, targets, weights)`.
    pub fn adjacency(&self) -> (Vec<usize>, Vec<usize>, Vec<f64>) {
        let deg = self.degrees();
        let mut offsets = vec![0; self.n + 1];
        for v in 0..self.n {
            offsets[v + 1] = offsets[v] + deg[v];
        }
        let mut cursor = offsets.clone();
        let mut targets = vec![0; offsets[self.n]];
        let mut weights = vec![0.0; offsets[self.n]];
        for e in &self.edges {
            for (a, b) in [(e.i, e.j), (e.j, e.i)] {
                targets[cursor[a]] = b;
                weights[cursor[a]] = e.weight;
                cursor[a] += 1;
            }
        }
        (offsets, targets, weights)
    }

    /// Replaces every weight `w(i,j)` by `w(i,j) / sqrt(M(i) M(j))`.
    pub fn rescale_conformal(&self) -> Result<Self> {
        if self.rescaled {
            return Err(Error::Config("graph weights are already conformally rescaled".into()));
        }
        let deg = self.degrees();
        if let Some(v) = (0..self.n).find(|&v| self.mean_neighbor_dist[v] <= 0.0) {
            let why = if deg[v] == 0 {
                "has no neighbors"
            } else {
                "coincides with all of its neighbors"
            };
            return Err(Error::Degenerate(format!(
                "vertex {v} {why}, so its mean neighbor distance is zero"
            )));
        }
        let m = &self.mean_neighbor_dist;
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                weight: e.weight / (m[e.i] * m[e.j]).sqrt(),
                ..*e
            })
            .collect();
        Ok(Self {
            edges,
            rescaled: true,
            ..self.clone()
        })
    }

    /// Edge list as CSV lines `i,j,weight`.
    pub fn write_edges_csv<W: Write + ?Sized>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(out, "i,j,weight")?;
        for e in &self.edges {
            writeln!(out, "{},{},{}", e.i, e.j, e.weight)?;
        }
        Ok(())
    }
}

fn mean_incident_weight(n: usize, edges: &[Edge]) -> Vec<f64> {
    let mut sum = vec![0.0; n];
    let mut count = vec![0usize; n];
    for e in edges {
        for v in [e.i, e.j] {
            sum[v] += e.weight;
            count[v] += 1;
        }
    }
    sum.iter()
        .zip(&count)
        .map(|(&s, &c)| if c == 0 { 0.0 } else { s / c as f64 })
        .collect()
}

/// Indices of the `k` nearest other points to `i`, ties broken by smaller index.
pub fn k_nearest(cloud: &PointCloud, i: usize, k: usize) -> Vec<usize> {
    let p = cloud.point(i);
    let mut cand: Vec<(f64, usize)> = (0..cloud.len())
        .filter(|&j| j != i)
        .map(|j| (crate::datasets::squared_euclidean(p, cloud.point(j)), j))
        .collect();
    let by_dist = |a: &(f64, usize), b: &(f64, usize)| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1));
    if k < cand.len() {
        cand.select_nth_unstable_by(k - 1, by_dist);
        cand.truncate(k);
    }
    cand.sort_unstable_by(by_dist);
    cand.into_iter().map(|(_, j)| j).collect()
}

/// Builds the neighborhood graph of `cloud` under `rule`, weighted by Euclidean distance.
pub fn build_graph(cloud: &PointCloud, rule: NeighborRule) -> Result<NeighborhoodGraph> {
    let n = cloud.len();
    rule.validate(n)?;
    let mut pairs: Vec<(usize, usize)> = match rule {
        NeighborRule::Knn(k) => (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                k_nearest(cloud, i, k)
                    .into_iter()
                    .map(move |j| (i.min(j), i.max(j)))
            })
            .collect(),
        NeighborRule::Epsilon(radius) => {
            let r2 = radius * radius;
            (0..n)
                .into_par_iter()
                .flat_map_iter(|i| {
                    let p = cloud.point(i);
                    (i + 1..n)
                        .filter(move |&j| crate::datasets::squared_euclidean(p, cloud.point(j)) <= r2)
                        .map(move |j| (i, j))
                })
                .collect()
        }
    };
    pairs.sort_unstable();
    pairs.dedup();
    let edges = pairs
        .into_iter()
        .map(|(i, j)| Edge::new(i, j, cloud.distance(i, j)));
    NeighborhoodGraph::from_edges(n, edges, rule)
}
