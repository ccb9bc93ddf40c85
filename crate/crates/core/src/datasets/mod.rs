//! Point clouds, CSV ingestion, and synthetic manifolds with known ground truth.

mod csv_io;
mod synthetic;

pub use csv_io::{load_csv, read_csv, save_csv, write_csv};
pub use synthetic::{generate, ManifoldKind, SyntheticSample, SyntheticSpec, SwissRoll};

use crate::error::{Error, Result};

/// `n` points in `d`-dimensional ambient space, stored row-major.
///
/// Immutable after construction: every coordinate is finite, `n >= 2` and `d >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    coords: Vec<f64>,
    n: usize,
    dim: usize,
}

impl PointCloud {
    pub fn new(n: usize, dim: usize, coords: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Input("ambient dimension must be at least 1".into()));
        }
        if n < 2 {
            return Err(Error::Input(format!("need at least 2 points, got {n}")));
        }
        if coords.len() != n * dim {
            return Err(Error::Input(format!(
                "coordinate buffer has {} values, expected {n} x {dim}",
                coords.len()
            )));
        }
        if let Some(pos) = coords.iter().position(|c| !c.is_finite()) {
            return Err(Error::Input(format!(
                "non-finite coordinate at point {}, axis {}",
                pos / dim,
                pos % dim
            )));
        }
        Ok(Self { coords, n, dim })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let dim = rows.first().map_or(0, |r| r.as_ref().len());
        let mut coords = Vec::with_capacity(rows.len() * dim);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != dim {
                return Err(Error::Input(format!(
                    "point {i} has {} coordinates, expected {dim}",
                    row.len()
                )));
            }
            coords.extend_from_slice(row);
        }
        Self::new(rows.len(), dim, coords)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.dim)
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        euclidean(self.point(i), self.point(j))
    }

    /// Applies `f` to every point, producing a cloud of ambient dimension `out_dim`.
    pub fn map_points(&self, out_dim: usize, mut f: impl FnMut(&[f64], &mut [f64])) -> Result<Self> {
        let mut coords = vec![0.0; self.n * out_dim];
        for (src, dst) in self.points().zip(coords.chunks_exact_mut(out_dim.max(1))) {
            f(src, dst);
        }
        Self::new(self.n, out_dim, coords)
    }

    pub fn scaled(&self, s: f64) -> Result<Self> {
        self.map_points(self.dim, |p, q| {
            for (a, b) in p.iter().zip(q) {
                *b = a * s;
            }
        })
    }

    /// Subcloud made of the given points, in the given order.
    pub fn select(&self, indices: &[usize]) -> Result<Self> {
        let mut coords = Vec::with_capacity(indices.len() * self.dim);
        for &i in indices {
            if i >= self.n {
                return Err(Error::Input(format!("point index {i} out of range (n = {})", self.n)));
            }
            coords.extend_from_slice(self.point(i));
        }
        Self::new(indices.len(), self.dim, coords)
    }
}

#[inline]
pub fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    squared_euclidean(a, b).sqrt()
}

#[inline]
pub fn squared_euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let d = x - y;
            d * d
        })
        .sum()
}
