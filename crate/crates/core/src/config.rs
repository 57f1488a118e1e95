//! Enumeration limits.
//!
//! Anything that walks all of `2^[n]` checks `n` against a bound that defaults
//! to [`DEFAULT_MAX_N`] and can be overridden with the `MATMOR_MAX_N`
//! environment variable. Circuit and flat enumeration is additionally capped
//! at [`STRUCTURE_MAX_N`].

use std::sync::OnceLock;

use crate::subset::MAX_GROUND_SET;
use crate::{Error, Result};

pub const DEFAULT_MAX_N: usize = 22;

/// Hard cap for circuit, flat and cocircuit listings.
pub const STRUCTURE_MAX_N: usize = 20;

pub const ENV_VAR: &str = "MATMOR_MAX_N";

/// The active enumeration bound, read once from the environment.
pub fn max_n() -> usize {
    static BOUND: OnceLock<usize> = OnceLock::new();
    *BOUND.get_or_init(|| {
        std::env::var(ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map(|v| v.min(MAX_GROUND_SET))
            .unwrap_or(DEFAULT_MAX_N)
    })
}

pub fn check_enumerable(n: usize) -> Result<()> {
    let bound = max_n();
    if n > bound {
        return Err(Error::EnumerationBound { n, bound });
    }
    Ok(())
}

pub(crate) fn check_structure_enumerable(n: usize) -> Result<()> {
    let bound = max_n().min(STRUCTURE_MAX_N);
    if n > bound {
        return Err(Error::EnumerationBound { n, bound });
    }
    Ok(())
}
