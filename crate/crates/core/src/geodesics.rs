//! Graph geodesics: all-pairs shortest paths through the neighborhood graph.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::io::Write;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::{check_indices, DenseMatrix, EdgeWeights};
use crate::neighborhood::NeighborhoodGraph;

/// Symmetric matrix of shortest-path lengths.
///
/// Pairs in different components are unreachable: [`GeodesicEdgeMatrix::get`]
/// returns `None` for them and the raw [`EdgeWeights::weight`] is infinite.
#[derive(Debug, Clone, PartialEq)]
pub struct GeodesicEdgeMatrix {
    dist: DenseMatrix,
    component_id: Vec<usize>,
    components: usize,
}

impl GeodesicEdgeMatrix {
    pub fn n(&self) -> usize {
        self.component_id.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        if self.component_id[i] == self.component_id[j] {
            Some(self.dist.weight(i, j))
        } else {
            None
        }
    }

    pub fn is_connected(&self) -> bool {
        self.components <= 1
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    /// Component label of every vertex, numbered by first appearance.
    pub fn component_ids(&self) -> &[usize] {
        &self.component_id
    }

    pub fn component_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.components];
        for &c in &self.component_id {
            sizes[c] += 1;
        }
        sizes
    }

    /// Vertices of the largest component (lowest label wins ties), ascending.
    pub fn largest_component(&self) -> Vec<usize> {
        let sizes = self.component_sizes();
        let best = (0..sizes.len()).fold(0, |b, c| if sizes[c] > sizes[b] { c } else { b });
        (0..self.n()).filter(|&v| self.component_id[v] == best).collect()
    }

    pub fn disconnected_error(&self) -> Error {
        let sizes = self.component_sizes();
        Error::Disconnected {
            components: self.components,
            largest: sizes.iter().copied().max().unwrap_or(0),
            total: self.n(),
        }
    }

    pub fn dense(&self) -> &DenseMatrix {
        &self.dist
    }

    /// Principal submatrix on `indices`. Distances keep their full-graph
    /// values, so paths may pass through vertices outside the subset.
    pub fn restrict(&self, indices: &[usize]) -> Result<Self> {
        check_indices(indices, self.n())?;
        let dist = DenseMatrix::from_fn(indices.len(), |a, b| self.dist.weight(indices[a], indices[b]));
        let mut relabel = vec![usize::MAX; self.components];
        let mut components = 0;
        let component_id = indices
            .iter()
            .map(|&v| {
                let c = &mut relabel[self.component_id[v]];
                if *c == usize::MAX {
                    *c = components;
                    components += 1;
                }
                *c
            })
            .collect();
        Ok(Self {
            dist,
            component_id,
            components,
        })
    }

    /// Row-major CSV dump; unreachable pairs are written as `inf`.
    pub fn write_csv<W: Write + ?Sized>(&self, out: &mut W) -> std::io::Result<()> {
        let n = self.n();
        let mut line = String::new();
        for i in 0..n {
            line.clear();
            for j in 0..n {
                if j > 0 {
                    line.push(',');
                }
                match self.get(i, j) {
                    Some(d) => line.push_str(&d.to_string()),
                    None => line.push_str("inf"),
                }
            }
            line.push('\n');
            out.write_all(line.as_bytes())?;
        }
        Ok(())
    }
}

impl EdgeWeights for GeodesicEdgeMatrix {
    fn order(&self) -> usize {
        self.n()
    }

    #[inline]
    fn weight(&self, i: usize, j: usize) -> f64 {
        self.dist.weight(i, j)
    }
}

#[derive(Clone, Copy, PartialEq)]
struct Frontier {
    dist: f64,
    vertex: usize,
}

impl Eq for Frontier {}

impl Ord for Frontier {
    // reversed for a min-heap
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for Frontier {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn dijkstra(source: usize, offsets: &[usize], targets: &[usize], weights: &[f64], dist: &mut [f64]) {
    dist.fill(f64::INFINITY);
    dist[source] = 0.0;
    let mut heap = BinaryHeap::new();
    heap.push(Frontier { dist: 0.0, vertex: source });
    while let Some(Frontier { dist: d, vertex: u }) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for k in offsets[u]..offsets[u + 1] {
            let v = targets[k];
            let nd = d + weights[k];
            if nd < dist[v] {
                dist[v] = nd;
                heap.push(Frontier { dist: nd, vertex: v });
            }
        }
    }
}

fn label_components(n: usize, offsets: &[usize], targets: &[usize]) -> (Vec<usize>, usize) {
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = count;
        stack.push(start);
        while let Some(u) = stack.pop() {
            for &v in &targets[offsets[u]..offsets[u + 1]] {
                if label[v] == usize::MAX {
                    label[v] = count;
                    stack.push(v);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// Connected-component label of every vertex and the number of components.
pub fn connected_components(graph: &NeighborhoodGraph) -> (Vec<usize>, usize) {
    let (offsets, targets, _) = graph.adjacency();
    label_components(graph.n(), &offsets, &targets)
}

/// Shortest-path distances between every pair of vertices, by one Dijkstra
/// run per source (sources processed in parallel).
pub fn all_pairs_geodesics(graph: &NeighborhoodGraph) -> GeodesicEdgeMatrix {
    let n = graph.n();
    let (offsets, targets, weights) = graph.adjacency();
    let mut data = vec![0.0; n * n];
    data.par_chunks_mut(n.max(1))
        .enumerate()
        .for_each(|(source, row)| dijkstra(source, &offsets, &targets, &weights, row));
    // Path sums can differ in the last bit between directions; keep the
    // smaller value so the matrix is exactly symmetric.
    for i in 0..n {
        for j in 0..i {
            let m = data[i * n + j].min(data[j * n + i]);
            data[i * n + j] = m;
            data[j * n + i] = m;
        }
    }
    let (component_id, components) = label_components(n, &offsets, &targets);
    let dist = DenseMatrix::from_row_major(n, data).expect("shortest-path matrix is symmetric");
    GeodesicEdgeMatrix {
        dist,
        component_id,
        components,
    }
}
