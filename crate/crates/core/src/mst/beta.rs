//! Monte Carlo calibration of the MST constant `beta_m` on the unit cube.

use std::io::{Read, Write};
use std::path::Path;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::gmst_length;
use crate::datasets::PointCloud;
use crate::error::{Error, Result};
use crate::matrix::EuclideanView;
use crate::rng;

/// One calibrated constant; also a row of the beta table CSV.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BetaEstimate {
    pub m: usize,
    pub gamma: f64,
    pub n: usize,
    pub beta_hat: f64,
    pub stderr: f64,
}

/// Mean of `L_gamma(n uniform points in [0,1]^m) / n^((m - gamma) / m)` over
/// `trials` independent draws, with the standard error of that mean.
pub fn estimate_beta(m: usize, gamma: f64, n: usize, trials: usize, seed: u64) -> Result<BetaEstimate> {
    if m < 2 {
        return Err(Error::Config(format!("beta calibration needs m >= 2, got {m}")));
    }
    if !(gamma > 0.0 && gamma < m as f64) {
        return Err(Error::Config(format!("beta calibration needs 0 < gamma < m, got gamma = {gamma}")));
    }
    if trials < 2 {
        return Err(Error::Config(format!("need at least 2 trials for a standard error, got {trials}")));
    }
    if n < 2 {
        return Err(Error::Config(format!("need at least 2 points per trial, got {n}")));
    }
    let norm = (n as f64).powf((m as f64 - gamma) / m as f64);
    let ratios: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = rng::stream(seed, &[m as u64, n as u64, t as u64]);
            let coords: Vec<f64> = (0..n * m).map(|_| rng.gen::<f64>()).collect();
            let cloud = PointCloud::new(n, m, coords)?;
            Ok(gmst_length(&EuclideanView(&cloud), gamma)?.total_length / norm)
        })
        .collect::<Result<_>>()?;
    let mean = ratios.iter().sum::<f64>() / trials as f64;
    let var = ratios.iter().map(|r| (r - mean).powi(2)).sum::<f64>() / (trials - 1) as f64;
    Ok(BetaEstimate {
        m,
        gamma,
        n,
        beta_hat: mean,
        stderr: (var / trials as f64).sqrt(),
    })
}

/// Calibrated constants keyed by `(m, gamma)`, stored as CSV `m,gamma,n,beta_hat,stderr`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BetaTable {
    pub rows: Vec<BetaEstimate>,
}

impl BetaTable {
    pub fn lookup(&self, m: usize, gamma: f64) -> Option<&BetaEstimate> {
        // later rows override earlier ones
        self.rows.iter().rev().find(|r| r.m == m && r.gamma == gamma)
    }

    pub fn insert(&mut self, row: BetaEstimate) {
        self.rows.retain(|r| !(r.m == row.m && r.gamma == row.gamma));
        self.rows.push(row);
    }

    pub fn read<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let headers = rdr.headers().map_err(|e| Error::Parse(e.to_string()))?.clone();
        let expected = ["m", "gamma", "n", "beta_hat", "stderr"];
        if headers.iter().ne(expected.iter().copied()) {
            return Err(Error::Parse(format!(
                "beta table header must be '{}', found '{}'",
                expected.join(","),
                headers.iter().collect::<Vec<_>>().join(",")
            )));
        }
        let rows = rdr
            .deserialize()
            .collect::<std::result::Result<Vec<BetaEstimate>, _>>()
            .map_err(|e| Error::Parse(format!("beta table: {e}")))?;
        Ok(Self { rows })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
        Self::read(file)
    }

    pub fn write<W: Write>(&self, out: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(out);
        for row in &self.rows {
            wtr.serialize(row).map_err(|e| Error::Internal(e.to_string()))?;
        }
        wtr.flush().map_err(|e| Error::Internal(e.to_string()))
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
        self.write(file)
    }
}
