use thiserror::Error;

/// Errors produced by the walker, tableau, quadrature and edge routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input failed a structural check (malformed permutation, bad tableau, ...).
    #[error("validation error: {0}")]
    Validation(String),

    /// A computation was refused because it exceeds a configured cap.
    #[error("resource limit: {what} = {requested} exceeds cap {cap}")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    /// Input is well formed but outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// A quadrature value failed its integer-recovery residual check.
    #[error("numerical consistency failure: raw value {raw} has residual {residual:e} (m = {m})")]
    NumericalConsistency { raw: f64, residual: f64, m: usize },

    /// Argument outside the supported range of a special function.
    #[error("argument {value} outside supported range [{min}, {max}]")]
    Range { value: f64, min: f64, max: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn validation(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}
