use serde::{Deserialize, Serialize};

use super::curve::GrowthCurve;
use super::plan::FitWindow;
use crate::error::{Error, Result};

/// Least-squares line `log(mean length) = a_hat * log(p) + b_hat`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearFit {
    pub a_hat: f64,
    pub b_hat: f64,
    /// Subset sizes that entered the regression.
    pub sizes: Vec<usize>,
    pub residuals: Vec<f64>,
    pub r_squared: f64,
}

/// Ordinary least squares on `(log p, log mean_length)` over the window.
pub fn fit_loglinear(curve: &GrowthCurve, window: &FitWindow) -> Result<LinearFit> {
    let sizes = window.select(&curve.sizes())?;
    let mut xs = Vec::with_capacity(sizes.len());
    let mut ys = Vec::with_capacity(sizes.len());
    for &p in &sizes {
        let entry = curve.entry(p).expect("window sizes come from the curve");
        if !(entry.mean_length > 0.0 && entry.mean_length.is_finite()) {
            return Err(Error::Degenerate(format!(
                "mean length {} at size {p} has no logarithm",
                entry.mean_length
            )));
        }
        xs.push((p as f64).ln());
        ys.push(entry.mean_length.ln());
    }
    fit_line(&xs, &ys).map(|(a_hat, b_hat, residuals, r_squared)| LinearFit {
        a_hat,
        b_hat,
        sizes,
        residuals,
        r_squared,
    })
}

/// Centered least squares: returns `(slope, intercept, residuals, r^2)`.
pub(crate) fn fit_line(xs: &[f64], ys: &[f64]) -> Result<(f64, f64, Vec<f64>, f64)> {
    let q = xs.len() as f64;
    let x_mean = xs.iter().sum::<f64>() / q;
    let y_mean = ys.iter().sum::<f64>() / q;
    let sxx: f64 = xs.iter().map(|x| (x - x_mean).powi(2)).sum();
    if !(sxx > 0.0) {
        return Err(Error::Degenerate("log-log design is singular: all sizes are equal".into()));
    }
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - x_mean) * (y - y_mean)).sum();
    let slope = sxy / sxx;
    let intercept = y_mean - slope * x_mean;
    let residuals: Vec<f64> = xs.iter().zip(ys).map(|(x, y)| y - (slope * x + intercept)).collect();
    let ss_res: f64 = residuals.iter().map(|r| r * r).sum();
    let ss_tot: f64 = ys.iter().map(|y| (y - y_mean).powi(2)).sum();
    let r_squared = if ss_tot > 0.0 { 1.0 - ss_res / ss_tot } else { 1.0 };
    Ok((slope, intercept, residuals, r_squared))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve_from(points: &[(usize, f64)]) -> GrowthCurve {
        GrowthCurve::from_trials(1.0, points.iter().map(|&(p, l)| (p, vec![l])).collect())
    }

    #[test]
    fn recovers_an_exact_line() {
        let curve = curve_from(&[10, 100, 1000].map(|p| (p, (0.5 * (p as f64).ln() + 1.0).exp())));
        let fit = fit_loglinear(&curve, &FitWindow::All).unwrap();
        assert!((fit.a_hat - 0.5).abs() < 1e-12);
        assert!((fit.b_hat - 1.0).abs() < 1e-12);
        assert!(fit.residuals.iter().all(|r| r.abs() < 1e-12));
    }

    #[test]
    fn flat_curve() {
        let c = 2.5f64;
        let curve = curve_from(&[(10, c.exp()), (20, c.exp()), (40, c.exp())]);
        let fit = fit_loglinear(&curve, &FitWindow::All).unwrap();
        assert!(fit.a_hat.abs() < 1e-15);
        assert!((fit.b_hat - c).abs() < 1e-12);
        assert_eq!(fit.r_squared, 1.0);
    }

    #[test]
    fn rejects_nonpositive_lengths_and_single_sizes() {
        let curve = curve_from(&[(10, 1.0), (20, 0.0)]);
        assert!(matches!(fit_loglinear(&curve, &FitWindow::All), Err(Error::Degenerate(_))));
        let curve = curve_from(&[(10, 1.0)]);
        assert!(fit_loglinear(&curve, &FitWindow::All).is_err());
        assert!(fit_line(&[1.0, 1.0], &[0.0, 1.0]).is_err());
    }
}
