use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{lis_length, random_permutation_with};
use crate::error::{validation, Result};

/// `n^{1/3} (l / n^{1/2} - 2)`: displacement `l` centred on `2 sqrt(n)` and
/// measured in units of `n^{1/6}`.
///
/// # Panics
///
/// If `n == 0`.
pub fn scale_displacement(l: i64, n: u64) -> f64 {
    assert!(n >= 1, "system size must be positive");
    let n = n as f64;
    n.cbrt() * (l as f64 / n.sqrt() - 2.0)
}

/// Monte Carlo sample of walker 1's largest leftward displacement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeStats {
    pub n: usize,
    pub trials: usize,
    pub samples: Vec<u32>,
    pub mean: f64,
    /// Sample standard deviation (`trials - 1` in the denominator).
    pub std: f64,
}

impl EdgeStats {
    pub fn from_samples(n: usize, samples: Vec<u32>) -> Self {
        let count = samples.len() as f64;
        let mean = samples.iter().map(|&s| s as f64).sum::<f64>() / count;
        let ss: f64 = samples.iter().map(|&s| (s as f64 - mean).powi(2)).sum();
        let std = if samples.len() > 1 {
            (ss / (count - 1.0)).sqrt()
        } else {
            0.0
        };
        EdgeStats {
            n,
            trials: samples.len(),
            samples,
            mean,
            std,
        }
    }

    pub fn mean_over_sqrt_n(&self) -> f64 {
        self.mean / (self.n as f64).sqrt()
    }

    /// Standard error of the mean.
    pub fn std_error(&self) -> f64 {
        self.std / (self.trials as f64).sqrt()
    }

    /// Two-column CSV `displacement,count` over the observed range.
    pub fn histogram_csv(&self) -> String {
        let mut out = String::from("displacement,count\n");
        let (Some(&lo), Some(&hi)) = (self.samples.iter().min(), self.samples.iter().max()) else {
            return out;
        };
        let mut counts = vec![0usize; (hi - lo) as usize + 1];
        for &s in &self.samples {
            counts[(s - lo) as usize] += 1;
        }
        for (i, c) in counts.iter().enumerate() {
            out.push_str(&format!("{},{c}\n", lo as usize + i));
        }
        out
    }
}

/// Draws `trials` uniform permutations of size `n` and records their longest
/// increasing subsequence, which is walker 1's largest leftward displacement
/// in the corresponding `L^n R^n` walk with at least `n` walkers.
///
/// Trial `t` uses ChaCha8 stream `t` of `seed`, so the output depends only
/// on `(n, trials, seed)`, not on the thread count.
pub fn sample_max_displacement(n: usize, trials: usize, seed: u64) -> Result<EdgeStats> {
    if n == 0 || trials == 0 {
        return Err(validation("need n >= 1 and trials >= 1"));
    }
    let samples: Vec<u32> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t as u64);
            lis_length(&random_permutation_with(n, &mut rng)) as u32
        })
        .collect();
    Ok(EdgeStats::from_samples(n, samples))
}
