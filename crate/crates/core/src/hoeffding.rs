//! Hoeffding sample-size and error bounds for averages of `[0, 1]` variables.

use crate::error::{Error, Result};

fn check_unit(name: &str, x: f64) -> Result<()> {
    if x > 0.0 && x < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{name} must lie in (0, 1), got {x}")))
    }
}

/// Smallest `k` with `2 exp(-2 k eps^2) <= delta`, i.e.
/// `ceil(0.5 * eps^-2 * ln(2 / delta))`.
pub fn samples_needed(epsilon: f64, delta: f64) -> Result<u64> {
    check_unit("epsilon", epsilon)?;
    check_unit("delta", delta)?;
    Ok((0.5 * (2.0 / delta).ln() / (epsilon * epsilon)).ceil() as u64)
}

/// Additive error guaranteed with confidence `1 - delta` after `k` samples:
/// `sqrt(ln(2 / delta) / (2 k))`.
pub fn error_halfwidth(k: u64, delta: f64) -> f64 {
    ((2.0 / delta).ln() / (2.0 * k as f64)).sqrt()
}
