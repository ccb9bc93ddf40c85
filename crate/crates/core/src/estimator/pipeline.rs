use serde::{Deserialize, Serialize};

use super::beta::BetaSource;
use super::curve::{growth_curve, resample};
use super::fit::fit_loglinear;
use super::plan::ResamplingPlan;
use super::report::{estimate, EstimateOptions, EstimateReport, LogBase, Rounding};
use crate::datasets::{PointCloud, SyntheticSpec};
use crate::error::{Error, Result};
use crate::geodesics::{all_pairs_geodesics, connected_components};
use crate::mst::gmst_length;
use crate::neighborhood::{build_graph, NeighborRule};

/// What to do when the neighborhood graph is disconnected.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DisconnectPolicy {
    #[default]
    Fail,
    LargestComponent,
}

/// Where subset geodesics come from.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeodesicMode {
    /// One neighborhood graph on all points; subsets read the full-graph distances.
    #[default]
    FullGraph,
    /// A fresh neighborhood graph and shortest paths for every resampled subset.
    PerSubset,
}

/// Origin of the analyzed points, echoed into reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DataSource {
    File { path: String, delimiter: String },
    Synthetic { spec: SyntheticSpec },
    Memory,
}

/// Full configuration of an estimation run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PipelineConfig {
    pub version: String,
    pub rule: NeighborRule,
    pub conformal: bool,
    pub geodesics: GeodesicMode,
    pub disconnect: DisconnectPolicy,
    pub log_base: LogBase,
    pub rounding: Rounding,
    pub plan: ResamplingPlan,
    pub beta: BetaSource,
    pub input: DataSource,
}

impl PipelineConfig {
    pub fn new(rule: NeighborRule, plan: ResamplingPlan) -> Self {
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            rule,
            conformal: false,
            geodesics: GeodesicMode::default(),
            disconnect: DisconnectPolicy::default(),
            log_base: LogBase::default(),
            rounding: Rounding::default(),
            plan,
            beta: BetaSource::default(),
            input: DataSource::Memory,
        }
    }

    pub fn with_conformal(mut self, conformal: bool) -> Self {
        self.conformal = conformal;
        self
    }

    pub fn with_beta(mut self, beta: BetaSource) -> Self {
        self.beta = beta;
        self
    }

    pub fn with_log_base(mut self, log_base: LogBase) -> Self {
        self.log_base = log_base;
        self
    }

    pub fn with_disconnect(mut self, policy: DisconnectPolicy) -> Self {
        self.disconnect = policy;
        self
    }

    pub fn with_geodesics(mut self, mode: GeodesicMode) -> Self {
        self.geodesics = mode;
        self
    }

    pub fn with_rounding(mut self, rounding: Rounding) -> Self {
        self.rounding = rounding;
        self
    }

    pub fn with_input(mut self, input: DataSource) -> Self {
        self.input = input;
        self
    }

    fn options(&self) -> EstimateOptions {
        EstimateOptions {
            beta: self.beta.clone(),
            log_base: self.log_base,
            rounding: self.rounding,
        }
    }
}

/// Neighborhood graph, optional conformal rescaling, geodesics, resampled
/// growth curve, log-log fit and moment inversion, in one call.
pub fn run_pipeline(cloud: &PointCloud, config: &PipelineConfig) -> Result<EstimateReport> {
    let n = cloud.len();
    config.rule.validate(n)?;
    let mut warnings = Vec::new();

    let mut graph = build_graph(cloud, config.rule)?;
    if graph.zero_weight_edges() > 0 {
        warnings.push(format!(
            "{} neighbor pair(s) coincide (zero-length edges)",
            graph.zero_weight_edges()
        ));
    }
    if config.conformal {
        graph = graph.rescale_conformal()?;
        warnings.push(
            "conformal rescaling: entropy is only determined up to an additive constant".to_string(),
        );
    }

    let keep_largest = |labels: &[usize], count: usize| -> Result<Option<Vec<usize>>> {
        if count <= 1 {
            return Ok(None);
        }
        let mut sizes = vec![0usize; count];
        labels.iter().for_each(|&c| sizes[c] += 1);
        let largest = (0..count).fold(0, |b, c| if sizes[c] > sizes[b] { c } else { b });
        match config.disconnect {
            DisconnectPolicy::Fail => Err(Error::Disconnected {
                components: count,
                largest: sizes[largest],
                total: n,
            }),
            DisconnectPolicy::LargestComponent => {
                let kept: Vec<usize> = (0..n).filter(|&v| labels[v] == largest).collect();
                Ok(Some(kept))
            }
        }
    };
    let mut note_kept = |kept: &[usize]| {
        warnings.push(format!(
            "graph has several components; kept the largest: {} of {n} points ({:.1}%)",
            kept.len(),
            100.0 * kept.len() as f64 / n as f64
        ));
    };

    let plan = &config.plan;
    let curve = match config.geodesics {
        GeodesicMode::FullGraph => {
            let mut matrix = all_pairs_geodesics(&graph);
            if let Some(kept) = keep_largest(matrix.component_ids(), matrix.component_count())? {
                note_kept(&kept);
                matrix = matrix.restrict(&kept)?;
            }
            plan.validate(matrix.n())?;
            growth_curve(&matrix, plan)?
        }
        GeodesicMode::PerSubset => {
            let (labels, count) = connected_components(&graph);
            let owned;
            let points = match keep_largest(&labels, count)? {
                Some(kept) => {
                    note_kept(&kept);
                    owned = cloud.select(&kept)?;
                    &owned
                }
                None => cloud,
            };
            plan.validate(points.len())?;
            resample(points.len(), plan, |subset| {
                let sub = points.select(subset)?;
                let mut g = build_graph(&sub, config.rule)?;
                if config.conformal {
                    g = g.rescale_conformal()?;
                }
                let m = all_pairs_geodesics(&g);
                if !m.is_connected() {
                    return Err(m.disconnected_error());
                }
                Ok(gmst_length(&m, plan.gamma)?.total_length)
            })?
        }
    };

    let fit = fit_loglinear(&curve, &plan.fit_window)?;
    let mut report = estimate(&curve, &fit, plan.gamma, &config.options())?;
    warnings.append(&mut report.warnings);
    report.warnings = warnings;
    report.config = Some(config.clone());
    Ok(report)
}
