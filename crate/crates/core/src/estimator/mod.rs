//! Resampled GMST growth curves and the method-of-moments inversion to
//! intrinsic dimension and entropy.
//!
//! For `m >= 2` and `0 < gamma < m`, the log mean GMST length over `p` points
//! behaves like `a log p + b` with
//!
//! ```text
//! a = (m - gamma) / m
//! b = log beta_m + (gamma / m) H_alpha,    alpha = (m - gamma) / m
//! ```
//!
//! so a least-squares fit of `(log p, log L_p)` yields `m_hat` from the slope
//! and `H_alpha` from the intercept.

mod beta;
mod curve;
mod fit;
mod pipeline;
mod plan;
mod report;

pub use beta::{
    approx_beta, cached_beta, BetaMode, BetaSource, DEFAULT_BETA_N, DEFAULT_BETA_SEED, DEFAULT_BETA_TRIALS,
};
pub use curve::{draw_subset, growth_curve, resample, CurveEntry, GrowthCurve};
pub use fit::{fit_loglinear, LinearFit};
pub use pipeline::{run_pipeline, DataSource, DisconnectPolicy, GeodesicMode, PipelineConfig};
pub use plan::{linear_sizes, log_sizes, FitWindow, ResamplingPlan};
pub use report::{estimate, EstimateOptions, EstimateReport, LogBase, Rounding, SMALL_SAMPLE_SIZE};
