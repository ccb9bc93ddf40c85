//! Intrinsic dimension and intrinsic Renyi entropy of manifold-supported data
//! from the growth rate of geodesic minimal spanning trees (GMST).
//!
//! The pipeline:
//!
//! 1. [`neighborhood::build_graph`] connects each point to its neighbors
//!    (k-rule or epsilon-rule), optionally followed by
//!    [`NeighborhoodGraph::rescale_conformal`].
//! 2. [`geodesics::all_pairs_geodesics`] turns the graph into a matrix of
//!    shortest-path lengths that approximate geodesic distances.
//! 3. [`estimator::growth_curve`] draws random subsets of increasing size and
//!    records the mean power-weighted MST length ([`mst::gmst_length`]).
//! 4. [`estimator::fit_loglinear`] fits `log L = a log p + b` and
//!    [`estimator::estimate`] inverts `(a, b)` into `(m_hat, H_alpha)`.
//!
//! [`estimator::run_pipeline`] chains all of these.
//!
//! ```no_run
//! use gmst::datasets::{generate, ManifoldKind, SyntheticSpec};
//! use gmst::estimator::{linear_sizes, run_pipeline, PipelineConfig, ResamplingPlan};
//! use gmst::neighborhood::NeighborRule;
//!
//! let sample = generate(&SyntheticSpec::new(ManifoldKind::SwissRoll, 2, 3, 1000, 1))?;
//! let plan = ResamplingPlan::new(linear_sizes(100, 1000, 10)?, 20, 1);
//! let report = run_pipeline(&sample.cloud, &PipelineConfig::new(NeighborRule::Knn(7), plan))?;
//! println!("m_hat = {}, H = {:.3} {}", report.m_hat, report.entropy, report.entropy_unit);
//! # Ok::<(), gmst::Error>(())
//! ```

pub mod cli;
pub mod datasets;
pub mod error;
pub mod estimator;
pub mod geodesics;
pub mod matrix;
pub mod mst;
pub mod neighborhood;
pub mod rng;

pub use datasets::PointCloud;
pub use error::{Error, Result};
pub use geodesics::GeodesicEdgeMatrix;
pub use neighborhood::{NeighborRule, NeighborhoodGraph};
