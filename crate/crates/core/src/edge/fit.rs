use serde::{Deserialize, Serialize};

use super::sampling::EdgeStats;
use crate::error::{validation, Result};

/// Least-squares line `log(std) = chi_hat * log(mean) + intercept`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub chi_hat: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

/// Smallest ratio between the largest and smallest system size in a fit.
pub const MIN_SIZE_SPAN: f64 = 100.0;

/// Fits the fluctuation exponent from per-size statistics.
///
/// Needs at least three sizes spanning two decades of `n`, each with
/// positive mean and standard deviation.
pub fn fit_chi(stats: &[EdgeStats]) -> Result<FitResult> {
    if stats.len() < 3 {
        return Err(validation(format!(
            "fit needs at least 3 system sizes, got {}",
            stats.len()
        )));
    }
    let lo = stats.iter().map(|s| s.n).min().unwrap() as f64;
    let hi = stats.iter().map(|s| s.n).max().unwrap() as f64;
    if hi < MIN_SIZE_SPAN * lo {
        return Err(validation(format!(
            "sizes {lo}..{hi} span less than two decades"
        )));
    }
    if stats.iter().any(|s| !(s.mean > 0.0 && s.std > 0.0)) {
        return Err(validation("every size needs positive mean and std"));
    }
    let xs: Vec<f64> = stats.iter().map(|s| s.mean.ln()).collect();
    let ys: Vec<f64> = stats.iter().map(|s| s.std.ln()).collect();
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    if sxx == 0.0 {
        return Err(validation("all means are equal; slope undefined"));
    }
    let chi_hat = sxy / sxx;
    let intercept = my - chi_hat * mx;
    let r_squared = if syy == 0.0 {
        1.0
    } else {
        (sxy * sxy / (sxx * syy)).clamp(0.0, 1.0)
    };
    Ok(FitResult {
        chi_hat,
        intercept,
        r_squared,
    })
}
