use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::beta::{BetaMode, BetaSource};
use super::curve::GrowthCurve;
use super::fit::LinearFit;
use super::pipeline::PipelineConfig;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LogBase {
    #[default]
    Nats,
    Bits,
}

impl LogBase {
    pub fn from_nats(self, value: f64) -> f64 {
        match self {
            LogBase::Nats => value,
            LogBase::Bits => value / std::f64::consts::LN_2,
        }
    }
}

impl FromStr for LogBase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" | "nats" => Ok(LogBase::Nats),
            "2" | "bits" => Ok(LogBase::Bits),
            _ => Err(Error::Config(format!("log base must be 'e' or '2', got '{s}'"))),
        }
    }
}

impl fmt::Display for LogBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LogBase::Nats => "nats",
            LogBase::Bits => "bits",
        })
    }
}

/// How the continuous `gamma / (1 - a_hat)` becomes an integer dimension.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rounding {
    /// Nearest integer, halves rounded up.
    #[default]
    Nearest,
    Floor,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct EstimateOptions {
    pub beta: BetaSource,
    pub log_base: LogBase,
    pub rounding: Rounding,
}

/// Dimension and entropy estimates together with everything used to derive them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateReport {
    pub m_hat: usize,
    /// `gamma / (1 - a_hat)` before rounding.
    pub m_continuous: f64,
    pub alpha: f64,
    pub gamma: f64,
    pub entropy: f64,
    pub entropy_unit: LogBase,
    pub beta_mode: BetaMode,
    pub beta_value: f64,
    pub rounding: Rounding,
    pub warnings: Vec<String>,
    pub fit: LinearFit,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<PipelineConfig>,
    pub curve: GrowthCurve,
}

pub const SMALL_SAMPLE_SIZE: usize = 100;

/// Inverts the fitted slope and intercept into `(m_hat, H_alpha)`:
/// `m = gamma / (1 - a)` and `H = (m / gamma) (b - log beta_m)`.
pub fn estimate(curve: &GrowthCurve, fit: &LinearFit, gamma: f64, options: &EstimateOptions) -> Result<EstimateReport> {
    let a = fit.a_hat;
    if !(a.is_finite() && fit.b_hat.is_finite()) {
        return Err(Error::Degenerate(format!("non-finite fit (a_hat = {a}, b_hat = {})", fit.b_hat)));
    }
    if a >= 1.0 {
        return Err(Error::IllPosedSlope { a_hat: a });
    }
    if a <= 0.0 {
        return Err(Error::DegenerateSlope { a_hat: a });
    }
    let mut warnings = Vec::new();
    let m_continuous = gamma / (1.0 - a);
    let rounded = match options.rounding {
        Rounding::Nearest => (m_continuous + 0.5).floor(),
        Rounding::Floor => m_continuous.floor(),
    };
    let m_hat = if rounded < 2.0 {
        warnings.push(format!(
            "dimension estimate {m_continuous:.4} rounds below 2; clamped to m_hat = 2"
        ));
        2
    } else {
        rounded as usize
    };
    let m = m_hat as f64;
    if gamma >= m {
        return Err(Error::Config(format!(
            "gamma = {gamma} must be below the estimated dimension {m_hat} for a valid entropy order"
        )));
    }
    if fit.sizes.last().is_some_and(|&p| p < SMALL_SAMPLE_SIZE) {
        warnings.push(format!(
            "small sample: largest fitted subset size is {} (< {SMALL_SAMPLE_SIZE}); the asymptotic growth model may not hold",
            fit.sizes.last().unwrap()
        ));
    }
    let beta_value = options.beta.beta(m_hat, gamma)?;
    let entropy_nats = (m / gamma) * (fit.b_hat - beta_value.ln());
    Ok(EstimateReport {
        m_hat,
        m_continuous,
        alpha: (m - gamma) / m,
        gamma,
        entropy: options.log_base.from_nats(entropy_nats),
        entropy_unit: options.log_base,
        beta_mode: options.beta.mode(),
        beta_value,
        rounding: options.rounding,
        warnings,
        fit: fit.clone(),
        config: None,
        curve: curve.clone(),
    })
}

impl EstimateReport {
    pub fn entropy_nats(&self) -> f64 {
        match self.entropy_unit {
            LogBase::Nats => self.entropy,
            LogBase::Bits => self.entropy * std::f64::consts::LN_2,
        }
    }

    /// Key-value text document (TOML).
    pub fn to_text(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Internal(format!("report serialization: {e}")))
    }

    pub fn from_text(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(format!("report: {e}")))
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Internal(format!("report serialization: {e}")))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("report: {e}")))
    }
}
