//! Coupled Logistic–Sine chaotic map and the population initializer built on it.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::population::Population;
use crate::rng::RandomSource;
use crate::space::SearchSpace;

/// Lower end of the map's image over `[0, 1)`, reached at `s = 0.5`.
pub const MAP_MIN: f64 = -core::f64::consts::FRAC_1_SQRT_2;
/// Supremum of the map's image over `[0, 1)`.
pub const MAP_MAX: f64 = 1.0;

#[inline]
fn coupled(s: f64) -> f64 {
    libm::sin(PI * (s * (1.0 - s) + libm::sin(PI * s)))
}

/// `sin(pi * (s(1 - s) + sin(pi * s)))` for `s` in `[0, 1)`.
pub fn coupled_map(seed_value: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&seed_value) {
        return Err(Error::InvalidArgument(format!(
            "chaotic seed must lie in [0, 1), got {seed_value}"
        )));
    }
    Ok(coupled(seed_value))
}

/// Chaotic initial population: one uniform seed per coordinate, pushed through
/// [`coupled_map`], folded by absolute value and scaled into the bounds.
///
/// Draws `n * dim` values in row-major order. The result is unevaluated.
pub fn dcmis_init<R: RandomSource + ?Sized>(
    space: &SearchSpace,
    n: usize,
    rng: &mut R,
) -> Result<Population> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "population size must be positive".into(),
        ));
    }
    let positions: Vec<Vec<f64>> = (0..n)
        .map(|_| {
            space
                .lower()
                .iter()
                .zip(space.upper())
                .map(|(lo, hi)| lo + libm::fabs(coupled(rng.uniform())) * (hi - lo))
                .collect()
        })
        .collect();
    Population::from_positions(positions)
}

/// Uniform pseudo-random initial population, same draw layout as [`dcmis_init`].
pub fn uniform_init<R: RandomSource + ?Sized>(
    space: &SearchSpace,
    n: usize,
    rng: &mut R,
) -> Result<Population> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "population size must be positive".into(),
        ));
    }
    Population::from_positions((0..n).map(|_| space.sample(rng)).collect())
}

/// One chaotic disturbance value: the map applied to a fresh uniform draw.
pub fn chaotic_disturbance<R: RandomSource + ?Sized>(rng: &mut R) -> f64 {
    coupled(rng.uniform())
}
