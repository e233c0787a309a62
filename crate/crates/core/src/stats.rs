//! Summary statistics over repeated trials.

use crate::error::{Error, Result};

/// Best / worst / mean / sample standard deviation of final fitness values.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TrialStats {
    pub best: f64,
    pub worst: f64,
    pub mean: f64,
    /// Sample standard deviation (n - 1 denominator); 0 for a single run.
    pub std: f64,
    pub runs: usize,
}

pub fn aggregate_stats(values: &[f64]) -> Result<TrialStats> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    let runs = values.len();
    let best = values.iter().copied().fold(f64::INFINITY, f64::min);
    let worst = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    // rounding can push the mean of equal values one ulp outside [best, worst]
    let mean = (values.iter().sum::<f64>() / runs as f64).clamp(best, worst);
    let std = if runs > 1 {
        let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
        libm::sqrt(ss / (runs - 1) as f64)
    } else {
        0.0
    };
    Ok(TrialStats {
        best,
        worst,
        mean,
        std,
        runs,
    })
}
