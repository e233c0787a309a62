use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rng::RandomSource;

/// Axis-aligned box `lower[j] <= x[j] <= upper[j]`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SearchSpace {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl SearchSpace {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::InvalidArgument("search space needs dim >= 1".into()));
        }
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch {
                expected: lower.len(),
                found: upper.len(),
            });
        }
        for (j, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::InvalidArgument(format!(
                    "bounds of dimension {j} must be finite with lower < upper (got [{lo}, {hi}])"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The same `[lower, upper]` interval in every dimension.
    pub fn uniform(dim: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::new(alloc::vec![lower; dim], alloc::vec![upper; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| lo <= v && v <= hi)
    }

    pub fn check_dim(&self, x: &[f64]) -> Result<()> {
        if x.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.len(),
            })
        }
    }

    /// Clamp in place. The length must already match.
    pub(crate) fn clamp_in_place(&self, x: &mut [f64]) {
        for (v, (lo, hi)) in x.iter_mut().zip(self.lower.iter().zip(&self.upper)) {
            *v = clamp(*v, *lo, *hi);
        }
    }

    /// Uniform sample from the box, drawing one value per dimension.
    pub fn sample<R: RandomSource + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| lo + rng.uniform() * (hi - lo))
            .collect()
    }
}

// NaN maps to the lower bound so nothing non-finite survives a commit.
#[inline]
fn clamp(v: f64, lo: f64, hi: f64) -> f64 {
    if v >= hi {
        hi
    } else if v > lo {
        v
    } else {
        lo
    }
}

/// Componentwise clamp of `position` into `space`.
pub fn clamp_to_bounds(position: &[f64], space: &SearchSpace) -> Result<Vec<f64>> {
    space.check_dim(position)?;
    let mut out = position.to_vec();
    space.clamp_in_place(&mut out);
    Ok(out)
}
