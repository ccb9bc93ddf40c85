use std::collections::HashMap;
use std::f64::consts::{E, PI};
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mst::{estimate_beta, BetaEstimate, BetaTable};

/// Large-`m` approximation `log beta_m ~ (gamma / 2) log(m / (2 pi e))`.
pub fn approx_beta(m: usize, gamma: f64) -> f64 {
    (0.5 * gamma * (m as f64 / (2.0 * PI * E)).ln()).exp()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BetaMode {
    Approx,
    Montecarlo,
    Table,
}

pub const DEFAULT_BETA_N: usize = 2048;
pub const DEFAULT_BETA_TRIALS: usize = 32;
pub const DEFAULT_BETA_SEED: u64 = 0xbe7a;

/// Where `beta_m` comes from when converting the intercept into an entropy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", content = "params", rename_all = "kebab-case")]
pub enum BetaSource {
    Approx,
    MonteCarlo { n: usize, trials: usize, seed: u64 },
    Table(BetaTable),
}

impl Default for BetaSource {
    fn default() -> Self {
        BetaSource::MonteCarlo {
            n: DEFAULT_BETA_N,
            trials: DEFAULT_BETA_TRIALS,
            seed: DEFAULT_BETA_SEED,
        }
    }
}

type CacheKey = (usize, u64, usize, usize, u64);

fn cache() -> &'static Mutex<HashMap<CacheKey, BetaEstimate>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, BetaEstimate>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Monte Carlo estimate memoized for the lifetime of the process.
pub fn cached_beta(m: usize, gamma: f64, n: usize, trials: usize, seed: u64) -> Result<BetaEstimate> {
    let key = (m, gamma.to_bits(), n, trials, seed);
    if let Some(hit) = cache().lock().expect("beta cache poisoned").get(&key) {
        return Ok(*hit);
    }
    let est = estimate_beta(m, gamma, n, trials, seed)?;
    cache().lock().expect("beta cache poisoned").insert(key, est);
    Ok(est)
}

impl BetaSource {
    pub fn mode(&self) -> BetaMode {
        match self {
            BetaSource::Approx => BetaMode::Approx,
            BetaSource::MonteCarlo { .. } => BetaMode::Montecarlo,
            BetaSource::Table(_) => BetaMode::Table,
        }
    }

    pub fn beta(&self, m: usize, gamma: f64) -> Result<f64> {
        match self {
            BetaSource::Approx => Ok(approx_beta(m, gamma)),
            BetaSource::MonteCarlo { n, trials, seed } => {
                Ok(cached_beta(m, gamma, *n, *trials, *seed)?.beta_hat)
            }
            BetaSource::Table(table) => table.lookup(m, gamma).map(|r| r.beta_hat).ok_or_else(|| {
                Error::Config(format!("beta table has no entry for m = {m}, gamma = {gamma}"))
            }),
        }
    }

    /// Short description for configuration echoes.
    pub fn describe(&self) -> String {
        match self {
            BetaSource::Approx => "approx".into(),
            BetaSource::MonteCarlo { n, trials, seed } => format!("montecarlo(n={n},trials={trials},seed={seed})"),
            BetaSource::Table(t) => format!("table({} rows)", t.rows.len()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planar_value() {
        let b = approx_beta(2, 1.0);
        assert!((b.ln() - (-1.072_364_942_925_000)).abs() < 1e-9, "{}", b.ln());
        assert!((b - 0.342_2).abs() < 1e-4);
    }

    #[test]
    fn monotone_in_m_and_linear_in_gamma() {
        let mut prev = 0.0;
        for m in 2..40 {
            let b = approx_beta(m, 1.0);
            assert!(b > prev);
            prev = b;
            assert!((approx_beta(m, 2.0).ln() - 2.0 * b.ln()).abs() < 1e-12);
        }
        // crosses 1 between 17 and 18, where m = 2 pi e ~ 17.08
        assert!(approx_beta(17, 1.0) < 1.0 && approx_beta(18, 1.0) > 1.0);
    }

    #[test]
    fn table_lookup_errors_when_missing() {
        let src = BetaSource::Table(BetaTable::default());
        assert!(matches!(src.beta(2, 1.0), Err(Error::Config(_))));
        assert_eq!(src.mode(), BetaMode::Table);
    }
}
