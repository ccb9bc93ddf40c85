use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which subset sizes of a growth curve enter the log-log regression.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FitWindow {
    All,
    /// The largest `ceil(fraction * Q)` sizes (at least two).
    TopFraction { fraction: f64 },
    /// Sizes strictly greater than `above`.
    Above { above: usize },
    Sizes { sizes: Vec<usize> },
}

impl Default for FitWindow {
    fn default() -> Self {
        FitWindow::TopFraction { fraction: 0.5 }
    }
}

impl FitWindow {
    /// Sizes of `available` (ascending) selected by this window.
    pub fn select(&self, available: &[usize]) -> Result<Vec<usize>> {
        let chosen: Vec<usize> = match self {
            FitWindow::All => available.to_vec(),
            FitWindow::TopFraction { fraction } => {
                if !(*fraction > 0.0 && *fraction <= 1.0) {
                    return Err(Error::Config(format!("fit fraction must be in (0, 1], got {fraction}")));
                }
                let q = available.len();
                let keep = ((fraction * q as f64).ceil() as usize).clamp(2.min(q), q);
                available[q - keep..].to_vec()
            }
            FitWindow::Above { above } => available.iter().copied().filter(|p| p > above).collect(),
            FitWindow::Sizes { sizes } => {
                if let Some(p) = sizes.iter().find(|p| !available.contains(p)) {
                    return Err(Error::Config(format!("fit size {p} is not one of the curve sizes")));
                }
                available.iter().copied().filter(|p| sizes.contains(p)).collect()
            }
        };
        if chosen.len() < 2 {
            return Err(Error::Config(format!(
                "fit window keeps {} distinct size(s); a line needs at least 2",
                chosen.len()
            )));
        }
        Ok(chosen)
    }
}

/// Parameters of the resampling loop.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResamplingPlan {
    /// Strictly increasing subset sizes, each in `[2, n]`.
    pub sizes: Vec<usize>,
    pub trials_per_size: usize,
    pub seed: u64,
    pub gamma: f64,
    pub fit_window: FitWindow,
}

impl ResamplingPlan {
    pub fn new(sizes: Vec<usize>, trials_per_size: usize, seed: u64) -> Self {
        Self {
            sizes,
            trials_per_size,
            seed,
            gamma: 1.0,
            fit_window: FitWindow::default(),
        }
    }

    pub fn with_gamma(mut self, gamma: f64) -> Self {
        self.gamma = gamma;
        self
    }

    pub fn with_fit_window(mut self, window: FitWindow) -> Self {
        self.fit_window = window;
        self
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if self.sizes.is_empty() {
            return Err(Error::Config("resampling plan has no subset sizes".into()));
        }
        if let Some(w) = self.sizes.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::Config(format!(
                "subset sizes must be strictly increasing ({} then {})",
                w[0], w[1]
            )));
        }
        if self.sizes[0] < 2 {
            return Err(Error::Config(format!("subset sizes must be at least 2, got {}", self.sizes[0])));
        }
        let largest = *self.sizes.last().unwrap();
        if largest > n {
            return Err(Error::Config(format!(
                "subset size {largest} exceeds the {n} available points"
            )));
        }
        if self.trials_per_size == 0 {
            return Err(Error::Config("trials per size must be at least 1".into()));
        }
        if !(self.gamma.is_finite() && self.gamma > 0.0) {
            return Err(Error::Config(format!("gamma must be positive, got {}", self.gamma)));
        }
        self.fit_window.select(&self.sizes)?;
        Ok(())
    }
}

fn check_range(min: usize, max: usize, count: usize) -> Result<()> {
    if count < 2 || min < 2 || min >= max {
        return Err(Error::Config(format!(
            "size range needs 2 <= min < max and count >= 2, got {min}:{max}:{count}"
        )));
    }
    Ok(())
}

fn distinct(sizes: Vec<usize>, min: usize, max: usize, count: usize) -> Result<Vec<usize>> {
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Config(format!(
            "range {min}:{max} is too narrow for {count} distinct integer sizes"
        )));
    }
    Ok(sizes)
}

/// `count` evenly spaced sizes from `min` to `max` inclusive, rounded to integers.
pub fn linear_sizes(min: usize, max: usize, count: usize) -> Result<Vec<usize>> {
    check_range(min, max, count)?;
    let step = (max - min) as f64 / (count - 1) as f64;
    let sizes = (0..count)
        .map(|k| (min as f64 + k as f64 * step).round() as usize)
        .collect();
    distinct(sizes, min, max, count)
}

/// `count` geometrically spaced sizes from `min` to `max` inclusive, rounded to integers.
pub fn log_sizes(min: usize, max: usize, count: usize) -> Result<Vec<usize>> {
    check_range(min, max, count)?;
    let ratio = (max as f64 / min as f64).ln() / (count - 1) as f64;
    let sizes = (0..count)
        .map(|k| (min as f64 * (k as f64 * ratio).exp()).round() as usize)
        .collect();
    distinct(sizes, min, max, count)
}
