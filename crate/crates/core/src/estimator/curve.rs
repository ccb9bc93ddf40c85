use std::io::Write;

use rand::seq::index;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::plan::ResamplingPlan;
use crate::error::{Error, Result};
use crate::geodesics::GeodesicEdgeMatrix;
use crate::matrix::SubsetView;
use crate::mst::gmst_length;
use crate::rng;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveEntry {
    pub size: usize,
    pub mean_length: f64,
    /// Sample standard deviation over trials (zero for a single trial).
    pub std_length: f64,
    pub trial_lengths: Vec<f64>,
}

/// Mean GMST length as a function of subset size, sorted by size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthCurve {
    pub gamma: f64,
    pub entries: Vec<CurveEntry>,
}

impl GrowthCurve {
    pub fn from_trials(gamma: f64, trials: Vec<(usize, Vec<f64>)>) -> Self {
        let entries = trials
            .into_iter()
            .map(|(size, lengths)| {
                let n = lengths.len() as f64;
                let mean = lengths.iter().sum::<f64>() / n;
                let std = if lengths.len() > 1 {
                    (lengths.iter().map(|l| (l - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
                } else {
                    0.0
                };
                CurveEntry {
                    size,
                    mean_length: mean,
                    std_length: std,
                    trial_lengths: lengths,
                }
            })
            .collect();
        Self { gamma, entries }
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.size).collect()
    }

    pub fn entry(&self, size: usize) -> Option<&CurveEntry> {
        self.entries.iter().find(|e| e.size == size)
    }

    /// CSV `p,trial,length` with one row per trial.
    pub fn write_trials_csv<W: Write + ?Sized>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(out, "p,trial,length")?;
        for e in &self.entries {
            for (t, l) in e.trial_lengths.iter().enumerate() {
                writeln!(out, "{},{},{}", e.size, t, l)?;
            }
        }
        Ok(())
    }

    /// CSV `p,mean,std` with one row per size.
    pub fn write_summary_csv<W: Write + ?Sized>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(out, "p,mean,std")?;
        for e in &self.entries {
            writeln!(out, "{},{},{}", e.size, e.mean_length, e.std_length)?;
        }
        Ok(())
    }
}

/// Draws the subset for trial `trial` at size `size`: `size` distinct indices
/// out of `n`, uniformly, ascending. Depends only on `(seed, size, trial)`.
pub fn draw_subset(n: usize, size: usize, seed: u64, trial: usize) -> Vec<usize> {
    let mut rng = rng::stream(seed, &[size as u64, trial as u64]);
    let mut subset = index::sample(&mut rng, n, size).into_vec();
    subset.sort_unstable();
    subset
}

/// Runs `length_of(subset)` for every (size, trial) in the plan and aggregates.
///
/// Trials run in parallel; results are gathered in fixed order so the curve is
/// bit-reproducible for any thread count.
pub fn resample<F>(n: usize, plan: &ResamplingPlan, length_of: F) -> Result<GrowthCurve>
where
    F: Fn(&[usize]) -> Result<f64> + Sync,
{
    plan.validate(n)?;
    let jobs: Vec<(usize, usize)> = plan
        .sizes
        .iter()
        .flat_map(|&p| (0..plan.trials_per_size).map(move |t| (p, t)))
        .collect();
    let lengths: Vec<f64> = jobs
        .par_iter()
        .map(|&(p, t)| length_of(&draw_subset(n, p, plan.seed, t)))
        .collect::<Result<_>>()?;
    let trials = plan
        .sizes
        .iter()
        .zip(lengths.chunks(plan.trials_per_size))
        .map(|(&p, chunk)| (p, chunk.to_vec()))
        .collect();
    Ok(GrowthCurve::from_trials(plan.gamma, trials))
}

/// Growth curve of mean GMST length over random subsets, reading geodesics
/// from the full-data matrix.
pub fn growth_curve(matrix: &GeodesicEdgeMatrix, plan: &ResamplingPlan) -> Result<GrowthCurve> {
    if !matrix.is_connected() {
        return Err(matrix.disconnected_error());
    }
    if let Some(&p) = plan.sizes.last() {
        if p > matrix.n() {
            return Err(Error::Config(format!(
                "subset size {p} exceeds the {} available points",
                matrix.n()
            )));
        }
    }
    resample(matrix.n(), plan, |subset| {
        Ok(gmst_length(&SubsetView::new(matrix, subset), plan.gamma)?.total_length)
    })
}
