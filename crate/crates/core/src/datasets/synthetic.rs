//! Synthetic manifolds with known intrinsic dimension and, where available,
//! closed-form intrinsic Renyi entropy of the sampling density.
//!
//! Every generator draws points uniformly on a parameter domain and pushes
//! them through a fixed embedding:
//!
//! | kind                 | parameter domain                 | embedding                     |
//! |----------------------|----------------------------------|-------------------------------|
//! | `hypercube`          | `[0,1]^m`                        | zero-padded coordinates       |
//! | `hyperplane`         | `[0,1]^m`                        | fixed orthonormal `d x m` frame |
//! | `swiss-roll`         | arc length `s` x height `h`      | `(t cos t, h, t sin t)`       |
//! | `sphere`             | unit sphere `S^m`                | zero-padded coordinates       |
//! | `conformal-fishbowl` | disk of radius 2                 | inverse stereographic map     |
//!
//! The first three are isometric, so a uniform parameter density is uniform
//! on the manifold and its Renyi entropy is `log(volume)` for every order.
//! The fishbowl map is conformal with local scale `c(x) = 2 / (1 + |x|^2)`,
//! so its manifold density is not uniform; no entropy ground truth is given.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::PointCloud;
use crate::error::{Error, Result};
use crate::rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ManifoldKind {
    Hyperplane,
    Hypercube,
    SwissRoll,
    Sphere,
    ConformalFishbowl,
}

impl ManifoldKind {
    pub const ALL: [ManifoldKind; 5] = [
        ManifoldKind::Hyperplane,
        ManifoldKind::Hypercube,
        ManifoldKind::SwissRoll,
        ManifoldKind::Sphere,
        ManifoldKind::ConformalFishbowl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ManifoldKind::Hyperplane => "hyperplane",
            ManifoldKind::Hypercube => "hypercube",
            ManifoldKind::SwissRoll => "swiss-roll",
            ManifoldKind::Sphere => "sphere",
            ManifoldKind::ConformalFishbowl => "conformal-fishbowl",
        }
    }

    /// Whether the embedding preserves path lengths (up to the global scale).
    pub fn is_isometric(self) -> bool {
        matches!(
            self,
            ManifoldKind::Hyperplane | ManifoldKind::Hypercube | ManifoldKind::SwissRoll
        )
    }
}

impl fmt::Display for ManifoldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ManifoldKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ManifoldKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = ManifoldKind::ALL.iter().map(|k| k.name()).collect();
                Error::Config(format!("unknown manifold kind '{s}' (expected one of {})", names.join(", ")))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SyntheticSpec {
    pub kind: ManifoldKind,
    pub intrinsic_dim: usize,
    pub ambient_dim: usize,
    pub n: usize,
    pub seed: u64,
    /// Global scale applied to the embedding (contraction below 1, expansion above).
    pub scale: f64,
}

impl SyntheticSpec {
    pub fn new(kind: ManifoldKind, intrinsic_dim: usize, ambient_dim: usize, n: usize, seed: u64) -> Self {
        Self {
            kind,
            intrinsic_dim,
            ambient_dim,
            n,
            seed,
            scale: 1.0,
        }
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let (m, d) = (self.intrinsic_dim, self.ambient_dim);
        if m < 2 || m > d {
            return Err(Error::Config(format!(
                "intrinsic dimension must satisfy 2 <= m <= d, got m = {m}, d = {d}"
            )));
        }
        if self.n < 2 {
            return Err(Error::Config(format!("need at least 2 points, got n = {}", self.n)));
        }
        if !(self.scale.is_finite() && self.scale > 0.0) {
            return Err(Error::Config(format!("scale must be positive, got {}", self.scale)));
        }
        let supported = match self.kind {
            ManifoldKind::Hyperplane | ManifoldKind::Hypercube => true,
            ManifoldKind::SwissRoll | ManifoldKind::ConformalFishbowl => m == 2 && d >= 3,
            ManifoldKind::Sphere => d > m,
        };
        if !supported {
            return Err(Error::Config(format!(
                "unsupported combination: {} with m = {m}, d = {d}",
                self.kind
            )));
        }
        Ok(())
    }

    /// Closed-form intrinsic Renyi entropy (nats) of the sampling density, when known.
    pub fn ground_truth_entropy(&self) -> Option<f64> {
        let m = self.intrinsic_dim;
        let log_volume = match self.kind {
            ManifoldKind::Hyperplane | ManifoldKind::Hypercube => 0.0,
            ManifoldKind::SwissRoll => SwissRoll::default().area().ln(),
            ManifoldKind::Sphere => sphere_area(m).ln(),
            ManifoldKind::ConformalFishbowl => return None,
        };
        Some(log_volume + m as f64 * self.scale.ln())
    }
}

/// Surface area of the unit sphere `S^m` in `R^(m+1)`.
pub(crate) fn sphere_area(m: usize) -> f64 {
    // |S^0| = 2, |S^1| = 2 pi, |S^m| = 2 pi / (m - 1) |S^(m-2)|
    let mut area = if m % 2 == 0 { 2.0 } else { 2.0 * PI };
    let mut k = if m % 2 == 0 { 2 } else { 3 };
    while k <= m {
        area *= 2.0 * PI / (k - 1) as f64;
        k += 2;
    }
    area
}

/// Arc-length parameterized swiss roll `(t cos t, h, t sin t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwissRoll {
    pub t_min: f64,
    pub t_max: f64,
    pub height: f64,
}

impl Default for SwissRoll {
    fn default() -> Self {
        Self {
            t_min: 1.5 * PI,
            t_max: 4.5 * PI,
            height: 21.0,
        }
    }
}

impl SwissRoll {
    /// Arc length of the spiral `t -> (t cos t, t sin t)` from 0 to `t`.
    pub fn arc_length(t: f64) -> f64 {
        0.5 * (t * (1.0 + t * t).sqrt() + t.asinh())
    }

    /// Inverse of [`SwissRoll::arc_length`] on `t >= 0`, by Newton iteration.
    pub fn angle_at_arc_length(s: f64) -> f64 {
        let mut t = (2.0 * s).sqrt().max(1e-3);
        for _ in 0..100 {
            let step = (Self::arc_length(t) - s) / (1.0 + t * t).sqrt();
            t = (t - step).max(0.0);
            if step.abs() <= 1e-15 * t.max(1.0) {
                break;
            }
        }
        t
    }

    pub fn arc_range(&self) -> (f64, f64) {
        (Self::arc_length(self.t_min), Self::arc_length(self.t_max))
    }

    pub fn spiral_length(&self) -> f64 {
        let (lo, hi) = self.arc_range();
        hi - lo
    }

    pub fn area(&self) -> f64 {
        self.spiral_length() * self.height
    }

    /// Embeds intrinsic coordinates `(s, h)` where `s` is measured from `t_min`.
    pub fn embed(&self, s: f64, h: f64) -> [f64; 3] {
        let t = Self::angle_at_arc_length(self.arc_range().0 + s);
        [t * t.cos(), h, t * t.sin()]
    }
}

/// A generated cloud together with the intrinsic coordinates of every point.
#[derive(Debug, Clone)]
pub struct SyntheticSample {
    pub spec: SyntheticSpec,
    pub cloud: PointCloud,
    params: Vec<f64>,
    param_dim: usize,
}

impl SyntheticSample {
    /// Intrinsic coordinates of point `i` (the unit vector itself for spheres).
    pub fn param(&self, i: usize) -> &[f64] {
        &self.params[i * self.param_dim..(i + 1) * self.param_dim]
    }

    /// True geodesic distance between two generated points, for kinds where it
    /// has a closed form.
    pub fn analytic_geodesic(&self, i: usize, j: usize) -> Option<f64> {
        let (a, b) = (self.param(i), self.param(j));
        let scale = self.spec.scale;
        match self.spec.kind {
            ManifoldKind::Hyperplane | ManifoldKind::Hypercube | ManifoldKind::SwissRoll => {
                Some(scale * super::euclidean(a, b))
            }
            ManifoldKind::Sphere => {
                let chord = super::euclidean(a, b).min(2.0);
                Some(scale * 2.0 * (0.5 * chord).asin())
            }
            ManifoldKind::ConformalFishbowl => None,
        }
    }
}

/// Radius of the planar disk mapped onto the fishbowl.
pub const FISHBOWL_RADIUS: f64 = 2.0;

const FRAME_SEED: u64 = 0x6a09_e667_f3bc_c908;

/// Deterministic orthonormal `d x m` frame (column-major), independent of the sample seed.
pub(crate) fn orthonormal_frame(m: usize, d: usize) -> Vec<f64> {
    let mut rng = rng::stream(FRAME_SEED, &[m as u64, d as u64]);
    let mut cols: Vec<Vec<f64>> = Vec::with_capacity(m);
    while cols.len() < m {
        let mut v: Vec<f64> = (0..d).map(|_| rng.sample(StandardNormal)).collect();
        // two passes of modified Gram-Schmidt
        for _ in 0..2 {
            for c in &cols {
                let dot: f64 = v.iter().zip(c).map(|(x, y)| x * y).sum();
                v.iter_mut().zip(c).for_each(|(x, y)| *x -= dot * y);
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-8 {
            v.iter_mut().for_each(|x| *x /= norm);
            cols.push(v);
        }
    }
    cols.concat()
}

/// Draws `spec.n` points on the requested manifold. Deterministic in `spec`.
pub fn generate(spec: &SyntheticSpec) -> Result<SyntheticSample> {
    spec.validate()?;
    let (m, d, n) = (spec.intrinsic_dim, spec.ambient_dim, spec.n);
    let mut rng = rng::stream(spec.seed, &[spec.kind as u64, m as u64, d as u64]);
    let scale = spec.scale;
    let mut coords = vec![0.0; n * d];
    let param_dim = if spec.kind == ManifoldKind::Sphere { m + 1 } else { m };
    let mut params = vec![0.0; n * param_dim];

    match spec.kind {
        ManifoldKind::Hypercube => {
            for (x, p) in coords.chunks_exact_mut(d).zip(params.chunks_exact_mut(m)) {
                for k in 0..m {
                    p[k] = rng.gen::<f64>();
                    x[k] = scale * p[k];
                }
            }
        }
        ManifoldKind::Hyperplane => {
            let frame = orthonormal_frame(m, d);
            for (x, p) in coords.chunks_exact_mut(d).zip(params.chunks_exact_mut(m)) {
                p.iter_mut().for_each(|u| *u = rng.gen::<f64>());
                for (k, col) in frame.chunks_exact(d).enumerate() {
                    for (xi, ci) in x.iter_mut().zip(col) {
                        *xi += scale * p[k] * ci;
                    }
                }
            }
        }
        ManifoldKind::SwissRoll => {
            let roll = SwissRoll::default();
            let length = roll.spiral_length();
            for (x, p) in coords.chunks_exact_mut(d).zip(params.chunks_exact_mut(2)) {
                let s = rng.gen::<f64>() * length;
                let h = rng.gen::<f64>() * roll.height;
                p[0] = s;
                p[1] = h;
                let y = roll.embed(s, h);
                for k in 0..3 {
                    x[k] = scale * y[k];
                }
            }
        }
        ManifoldKind::Sphere => {
            for (x, p) in coords.chunks_exact_mut(d).zip(params.chunks_exact_mut(m + 1)) {
                loop {
                    p.iter_mut().for_each(|u| *u = rng.sample(StandardNormal));
                    let norm = p.iter().map(|u| u * u).sum::<f64>().sqrt();
                    if norm > 1e-12 {
                        p.iter_mut().for_each(|u| *u /= norm);
                        break;
                    }
                }
                for k in 0..=m {
                    x[k] = scale * p[k];
                }
            }
        }
        ManifoldKind::ConformalFishbowl => {
            for (x, p) in coords.chunks_exact_mut(d).zip(params.chunks_exact_mut(2)) {
                let r = FISHBOWL_RADIUS * rng.gen::<f64>().sqrt();
                let theta = 2.0 * PI * rng.gen::<f64>();
                p[0] = r * theta.cos();
                p[1] = r * theta.sin();
                let q = r * r;
                x[0] = scale * 2.0 * p[0] / (1.0 + q);
                x[1] = scale * 2.0 * p[1] / (1.0 + q);
                x[2] = scale * (q - 1.0) / (1.0 + q);
            }
        }
    }

    Ok(SyntheticSample {
        spec: spec.clone(),
        cloud: PointCloud::new(n, d, coords)?,
        params,
        param_dim,
    })
}
