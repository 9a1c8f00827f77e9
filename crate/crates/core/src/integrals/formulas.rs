use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::grid::QuadratureGrid;
use super::linalg::{complex_det, vandermonde_sq};
use crate::combinatorics::{binomial, f_np_via_shapes, factorial};
use crate::error::{validation, Error, Result};
use crate::limits::Limits;

/// Relative tolerance of the integer-recovery residual check.
const RESIDUAL_TOL: f64 = 1e-6;

/// An integral value recovered as an exact integer.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntegralResult {
    pub n: usize,
    pub p: usize,
    pub value: u64,
    pub residual: f64,
    pub m: usize,
    #[serde(skip)]
    pub raw: f64,
}

/// Both sides of `Z(1..p -> 1..p; 2n) = C(2n, n) f(n, p)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub n: usize,
    pub p: usize,
    #[serde(serialize_with = "crate::bigjson::serialize")]
    pub z_value: BigUint,
    #[serde(serialize_with = "crate::bigjson::serialize")]
    pub binom: BigUint,
    #[serde(serialize_with = "crate::bigjson::serialize")]
    pub f_value: BigUint,
    pub residual: f64,
    pub m: usize,
    pub holds: bool,
}

/// Quadrature settings: caps and an optional fixed grid size.
#[derive(Debug, Clone, Copy, Default)]
pub struct Quadrature {
    /// Nodes per dimension; `None` picks the smallest exact grid.
    pub grid_m: Option<usize>,
    pub limits: Limits,
}

fn power_sum(thetas: &[f64], n: usize) -> f64 {
    let s: f64 = thetas.iter().map(|t| 2.0 * t.cos()).sum();
    s.powi(2 * n as i32)
}

fn recover(n: usize, p: usize, m: usize, raw: Complex64) -> Result<IntegralResult> {
    let rounded = raw.re.round();
    let residual = (raw.re - rounded).abs().max(raw.im.abs());
    if !rounded.is_finite() || rounded < 0.0 || residual >= RESIDUAL_TOL * rounded.max(1.0) {
        return Err(Error::NumericalConsistency {
            raw: raw.re,
            residual,
            m,
        });
    }
    Ok(IntegralResult {
        n,
        p,
        value: rounded as u64,
        residual,
        m,
        raw: raw.re,
    })
}

impl Quadrature {
    fn check(&self, n: usize, p: usize) -> Result<()> {
        if p == 0 {
            return Err(validation("at least one walker is required"));
        }
        Limits::check("p (integral dimension)", p, self.limits.integral_p)?;
        Limits::check("n (integral)", n, self.limits.integral_n)
    }

    /// An explicit `grid_m` below the exact size is refused: aliased
    /// frequencies still sum to integers, so the residual check cannot see it.
    fn grid(&self, p: usize, max_frequency: usize) -> Result<QuadratureGrid> {
        let exact = QuadratureGrid::exact_size(max_frequency);
        let m = match self.grid_m {
            // one node beyond the exact minimum, matching m >= 2n + 2p + 1
            None => exact + 1,
            Some(m) if m < exact => {
                return Err(validation(format!(
                    "grid of {m} nodes aliases this integrand; at least {exact} are needed"
                )))
            }
            Some(m) => m,
        };
        Ok(QuadratureGrid::new(m, p))
    }

    /// Grid for the symmetric integrands: per-variable degree `2n + 2(p-1)`,
    /// sized to `2n + 2p + 1` nodes.
    fn symmetric_grid(&self, n: usize, p: usize) -> Result<QuadratureGrid> {
        self.grid(p, 2 * n + 2 * p - 1)
    }

    /// Permutations of `1..=n` with longest increasing subsequence at most
    /// `p`, from the `p`-fold integral with the squared Vandermonde weight.
    pub fn f_np(&self, n: usize, p: usize) -> Result<IntegralResult> {
        self.check(n, p)?;
        let grid = self.symmetric_grid(n, p)?;
        let mean = grid.mean(|t| Complex64::from(power_sum(t, n) * vandermonde_sq(t)));
        let prefactor = 1.0 / (to_f64(&binomial(2 * n, n)) * to_f64(&factorial(p)));
        recover(n, p, grid.m(), mean * prefactor)
    }

    /// Number of `2n`-tick random turns walks from `start_sites` to
    /// `end_sites` (both strictly increasing, same length `p`).
    pub fn z(&self, n: usize, start_sites: &[i64], end_sites: &[i64]) -> Result<IntegralResult> {
        let p = start_sites.len();
        if end_sites.len() != p {
            return Err(validation(format!(
                "{p} start sites but {} end sites",
                end_sites.len()
            )));
        }
        for sites in [start_sites, end_sites] {
            if sites.windows(2).any(|w| w[0] >= w[1]) {
                return Err(validation(format!("sites {sites:?} must be strictly increasing")));
            }
        }
        self.check(n, p)?;
        let spread = start_sites
            .iter()
            .flat_map(|&a| end_sites.iter().map(move |&b| (a - b).unsigned_abs() as usize))
            .max()
            .unwrap_or(0);
        let grid = self.grid(p, (2 * n + spread).max(2 * n + 2 * p - 1))?;
        let mean = grid.mean(|t| {
            let matrix: Vec<Vec<Complex64>> = (0..p)
                .map(|a| {
                    (0..p)
                        .map(|b| {
                            let freq = (end_sites[a] - start_sites[b]) as f64;
                            Complex64::from_polar(1.0, -freq * t[a])
                        })
                        .collect()
                })
                .collect();
            complex_det(&matrix) * power_sum(t, n)
        });
        recover(n, p, grid.m(), mean)
    }

    /// Closed walks from `1..=p` back to `1..=p`, from the symmetrised form
    /// with the squared Vandermonde weight.
    pub fn z_equal_sites(&self, n: usize, p: usize) -> Result<IntegralResult> {
        self.check(n, p)?;
        let grid = self.symmetric_grid(n, p)?;
        let mean = grid.mean(|t| Complex64::from(power_sum(t, n) * vandermonde_sq(t)));
        recover(n, p, grid.m(), mean / to_f64(&factorial(p)))
    }

    /// Compares the quadrature value of the closed-walk count with
    /// `C(2n, n)` times the tableau count of `f(n, p)`.
    pub fn verify_identity_ad(&self, n: usize, p: usize) -> Result<IdentityReport> {
        let z = self.z_equal_sites(n, p)?;
        let binom = binomial(2 * n, n);
        let f_value = f_np_via_shapes(n, p);
        let z_value = BigUint::from(z.value);
        let holds = z_value == &binom * &f_value;
        Ok(IdentityReport {
            n,
            p,
            z_value,
            binom,
            f_value,
            residual: z.residual,
            m: z.m,
            holds,
        })
    }
}

fn to_f64(x: &BigUint) -> f64 {
    x.to_f64().expect("finite")
}

pub fn f_np_integral(n: usize, p: usize) -> Result<IntegralResult> {
    Quadrature::default().f_np(n, p)
}

pub fn z_integral(n: usize, start_sites: &[i64], end_sites: &[i64]) -> Result<IntegralResult> {
    Quadrature::default().z(n, start_sites, end_sites)
}

pub fn z_equal_sites_integral(n: usize, p: usize) -> Result<IntegralResult> {
    Quadrature::default().z_equal_sites(n, p)
}

pub fn verify_identity_ad(n: usize, p: usize) -> Result<IdentityReport> {
    Quadrature::default().verify_identity_ad(n, p)
}
