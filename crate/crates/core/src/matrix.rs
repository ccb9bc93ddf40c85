//! Symmetric edge-weight matrices and views over them.

use crate::datasets::PointCloud;
use crate::error::{Error, Result};

/// Read access to a symmetric matrix of pairwise edge lengths.
///
/// Unreachable pairs report `f64::INFINITY`.
pub trait EdgeWeights: Sync {
    fn order(&self) -> usize;
    fn weight(&self, i: usize, j: usize) -> f64;
}

/// Dense row-major symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..i {
                let w = f(i, j);
                data[i * n + j] = w;
                data[j * n + i] = w;
            }
        }
        Self { n, data }
    }

    /// Takes ownership of a row-major buffer; checks shape, symmetry and the zero diagonal.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::Input(format!("matrix buffer has {} entries, expected {n}x{n}", data.len())));
        }
        for i in 0..n {
            if data[i * n + i] != 0.0 {
                return Err(Error::Input(format!("nonzero diagonal entry at {i}")));
            }
            for j in 0..i {
                let (a, b) = (data[i * n + j], data[j * n + i]);
                if a != b || a.is_nan() || a < 0.0 {
                    return Err(Error::Input(format!("entry ({i}, {j}) is not a symmetric nonnegative length")));
                }
            }
        }
        Ok(Self { n, data })
    }

    /// Complete Euclidean distance matrix of a point cloud.
    pub fn euclidean(cloud: &PointCloud) -> Self {
        Self::from_fn(cloud.len(), |i, j| cloud.distance(i, j))
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }
}

impl EdgeWeights for DenseMatrix {
    fn order(&self) -> usize {
        self.n
    }

    #[inline]
    fn weight(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }
}

/// Principal submatrix view: vertex `a` of the view is vertex `indices[a]` of the parent.
pub struct SubsetView<'a, W: ?Sized> {
    parent: &'a W,
    indices: &'a [usize],
}

impl<'a, W: EdgeWeights + ?Sized> SubsetView<'a, W> {
    pub fn new(parent: &'a W, indices: &'a [usize]) -> Self {
        Self { parent, indices }
    }
}

impl<W: EdgeWeights + ?Sized> EdgeWeights for SubsetView<'_, W> {
    fn order(&self) -> usize {
        self.indices.len()
    }

    #[inline]
    fn weight(&self, i: usize, j: usize) -> f64 {
        self.parent.weight(self.indices[i], self.indices[j])
    }
}

/// Euclidean distances computed on demand, without materializing the matrix.
pub struct EuclideanView<'a>(pub &'a PointCloud);

impl EdgeWeights for EuclideanView<'_> {
    fn order(&self) -> usize {
        self.0.len()
    }

    #[inline]
    fn weight(&self, i: usize, j: usize) -> f64 {
        self.0.distance(i, j)
    }
}

/// Checks that `indices` are distinct and below `n`.
pub(crate) fn check_indices(indices: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    for &i in indices {
        if i >= n {
            return Err(Error::Input(format!("index {i} out of range (n = {n})")));
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::Input(format!("index {i} repeated")));
        }
    }
    Ok(())
}
