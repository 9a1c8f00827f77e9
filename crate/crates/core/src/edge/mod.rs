//! Soft-edge statistics of the maximal walker displacement.
//!
//! Scaled displacements `n^{1/3}(l / sqrt(n) - 2)` of the leading walkers
//! have correlation functions given by determinants of the Airy kernel.
//! The maximal displacement itself is sampled through uniformly random
//! permutations: walker 1's largest leftward excursion in an `L^n R^n` walk
//! with `p >= n` walkers is the first row of the tableau pair, i.e. the
//! longest increasing subsequence of the corresponding permutation.

mod airy;
mod fit;
mod kernel;
mod sampling;

pub use airy::{airy_ai, airy_ai_prime, airy_pair, AIRY_MAX, AIRY_MIN};
pub use fit::{fit_chi, FitResult, MIN_SIZE_SPAN};
pub use kernel::{kernel, kernel_diagonal, rho1_curve_csv, rho_k, KernelSample, DIAGONAL_DELTA, MAX_ORDER};
pub use sampling::{sample_max_displacement, scale_displacement, EdgeStats};
