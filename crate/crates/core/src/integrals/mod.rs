//! Exact evaluation of the `p`-fold trigonometric integrals that count
//! closed walks and permutations with bounded increasing subsequences.
//!
//! Every integrand is a trigonometric polynomial, so the uniform rectangle
//! rule on `[-pi, pi)^p` with enough nodes is exact up to rounding; the
//! integer value is then recovered by rounding with a residual check.

mod formulas;
mod grid;
mod linalg;

pub use formulas::{
    f_np_integral, verify_identity_ad, z_equal_sites_integral, z_integral, IdentityReport,
    IntegralResult, Quadrature,
};
pub use grid::QuadratureGrid;
pub use linalg::{complex_det, vandermonde_sq};
