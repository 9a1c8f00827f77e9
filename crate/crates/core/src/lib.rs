//! Random turns vicious walkers.
//!
//! The crate covers four connected pieces:
//!
//! * [`combinatorics`]: permutations, longest increasing subsequences,
//!   standard Young tableaux, RSK, and the count `f(n, p)` of permutations
//!   of `1..=n` whose longest increasing subsequence is at most `p`.
//! * [`walks`]: the random turns walker model. Closed walks of `p` walkers
//!   following a step word, their signed box diagrams, the bijection with
//!   pairs of tableaux, and the adjacent-step transpositions that carry any
//!   balanced word to `L^n R^n`.
//! * [`integrals`]: exact grid quadrature of the `p`-fold trigonometric
//!   integrals counting walks and permutations.
//! * [`edge`]: Airy functions, the Airy kernel and its correlation
//!   determinants, and Monte Carlo statistics of the maximal displacement.

pub mod combinatorics;
pub mod edge;
pub mod error;
pub mod integrals;
pub mod limits;
pub mod walks;

pub use error::{Error, Result};
pub use limits::Limits;

pub(crate) mod bigjson {
    use num_bigint::BigUint;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(value)
    }
}
