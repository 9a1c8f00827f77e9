use crate::error::{Error, Result};

/// Caps on the exponential-cost routines.
///
/// Exceeding a cap is reported as [`Error::ResourceLimit`]; nothing is
/// silently truncated. [`Limits::unbounded`] disables every check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest shape weight accepted by `enumerate_syt`.
    pub syt_enumeration: usize,
    /// Largest `n` accepted by `f_np_bruteforce` (n! permutations).
    pub bruteforce_n: usize,
    /// Largest word length `2n` accepted by walk enumeration.
    pub walk_steps: usize,
    /// Largest dimension `p` of a quadrature grid.
    pub integral_p: usize,
    /// Largest `n` of a quadrature integrand.
    pub integral_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            syt_enumeration: 12,
            bruteforce_n: 8,
            walk_steps: 12,
            integral_p: 4,
            integral_n: 8,
        }
    }
}

impl Limits {
    pub fn unbounded() -> Self {
        Limits {
            syt_enumeration: usize::MAX,
            bruteforce_n: usize::MAX,
            walk_steps: usize::MAX,
            integral_p: usize::MAX,
            integral_n: usize::MAX,
        }
    }

    pub(crate) fn check(what: &'static str, requested: usize, cap: usize) -> Result<()> {
        if requested > cap {
            Err(Error::ResourceLimit {
                what,
                requested,
                cap,
            })
        } else {
            Ok(())
        }
    }
}
