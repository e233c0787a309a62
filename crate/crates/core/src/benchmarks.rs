//! The classic 15-function test suite: seven unimodal (F1–F7), six
//! high-dimensional multimodal (F8–F13) and two fixed-dimension multimodal
//! functions (F14 Shekel's foxholes, F15 Kowalik).

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{E, PI};
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::population::Objective;
use crate::rng::{RandomSource, RngStream};
use crate::space::SearchSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum BenchmarkId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F12,
    F13,
    F14,
    F15,
}

impl BenchmarkId {
    pub const ALL: [BenchmarkId; 15] = [
        Self::F1,
        Self::F2,
        Self::F3,
        Self::F4,
        Self::F5,
        Self::F6,
        Self::F7,
        Self::F8,
        Self::F9,
        Self::F10,
        Self::F11,
        Self::F12,
        Self::F13,
        Self::F14,
        Self::F15,
    ];

    /// 1-based function number.
    pub fn number(self) -> usize {
        self as usize + 1
    }

    pub fn from_number(number: usize) -> Result<Self> {
        number
            .checked_sub(1)
            .and_then(|i| Self::ALL.get(i).copied())
            .ok_or_else(|| Error::UnknownBenchmark(alloc::format!("F{number}")))
    }
}

impl fmt::Display for BenchmarkId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.number())
    }
}

impl FromStr for BenchmarkId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .strip_prefix('F')
            .or_else(|| s.strip_prefix('f'))
            .ok_or_else(|| Error::UnknownBenchmark(s.to_string()))?;
        let number: usize = digits
            .parse()
            .map_err(|_| Error::UnknownBenchmark(s.to_string()))?;
        Self::from_number(number).map_err(|_| Error::UnknownBenchmark(s.to_string()))
    }
}

/// Static description of one benchmark.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkSpec {
    pub id: BenchmarkId,
    pub dim: usize,
    /// Symmetric box `[lower, upper]` in every dimension.
    pub lower: f64,
    pub upper: f64,
    /// Global minimum value. Approximate for F14 and F15.
    pub known_optimum: Option<f64>,
    /// A point attaining `known_optimum`, where one is known in closed form.
    pub known_optimizer: Option<Vec<f64>>,
}

impl BenchmarkSpec {
    pub fn space(&self) -> SearchSpace {
        SearchSpace::uniform(self.dim, self.lower, self.upper).expect("static bounds are valid")
    }
}

pub fn benchmark_spec(id: BenchmarkId) -> BenchmarkSpec {
    use BenchmarkId::*;
    let (dim, bound) = match id {
        F1 => (30, 30.0),
        F2 => (30, 10.0),
        F3 | F4 | F6 => (30, 100.0),
        F5 => (30, 30.0),
        F7 => (30, 1.28),
        F8 => (30, 500.0),
        F9 => (30, 5.12),
        F10 => (30, 32.0),
        F11 => (30, 600.0),
        F12 | F13 => (30, 50.0),
        F14 => (2, 65.0),
        F15 => (4, 5.0),
    };
    let (known_optimum, known_optimizer) = match id {
        F1 | F2 | F3 | F4 | F6 | F9 | F10 | F11 => (Some(0.0), Some(vec![0.0; dim])),
        F5 | F13 => (Some(0.0), Some(vec![1.0; dim])),
        F7 => (Some(0.0), Some(vec![0.0; dim])),
        F8 => (
            Some(-418.982_887_272_433_9 * dim as f64),
            Some(vec![420.968_7; dim]),
        ),
        F12 => (Some(0.0), Some(vec![-1.0; dim])),
        F14 => (Some(0.998_003_837_794_449_3), None),
        F15 => (Some(3.074_859_878_056e-4), None),
    };
    BenchmarkSpec {
        id,
        dim,
        lower: -bound,
        upper: bound,
        known_optimum,
        known_optimizer,
    }
}

/// Penalty term `u(x, a, k, m)` of the penalized functions.
pub fn penalty(x: f64, a: f64, k: f64, m: i32) -> f64 {
    if x > a {
        k * libm::pow(x - a, m as f64)
    } else if x < -a {
        k * libm::pow(-x - a, m as f64)
    } else {
        0.0
    }
}

#[inline]
fn sin2(v: f64) -> f64 {
    let s = libm::sin(v);
    s * s
}

/// Shekel's foxholes centers: a 5x5 lattice over {-32, -16, 0, 16, 32}^2.
fn foxhole(j: usize) -> [f64; 2] {
    const LEVELS: [f64; 5] = [-32.0, -16.0, 0.0, 16.0, 32.0];
    [LEVELS[j % 5], LEVELS[j / 5]]
}

const KOWALIK_A: [f64; 11] = [
    0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
];
const KOWALIK_B_INV: [f64; 11] = [0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0];

/// Value of benchmark `id` at `x`. F7 adds one uniform draw from `noise`.
pub fn evaluate_benchmark<R: RandomSource + ?Sized>(
    id: BenchmarkId,
    x: &[f64],
    noise: &mut R,
) -> Result<f64> {
    let dim = benchmark_spec(id).dim;
    if x.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: x.len(),
        });
    }
    Ok(raw_value(id, x, noise))
}

fn raw_value<R: RandomSource + ?Sized>(id: BenchmarkId, x: &[f64], noise: &mut R) -> f64 {
    use BenchmarkId::*;
    let n = x.len() as f64;
    match id {
        F1 => x.iter().map(|v| v * v).sum(),
        F2 => {
            let sum: f64 = x.iter().map(|v| libm::fabs(*v)).sum();
            let prod: f64 = x.iter().map(|v| libm::fabs(*v)).product();
            sum + prod
        }
        F3 => {
            let mut prefix = 0.0;
            x.iter()
                .map(|v| {
                    prefix += v;
                    prefix * prefix
                })
                .sum()
        }
        F4 => x.iter().map(|v| libm::fabs(*v)).fold(0.0, f64::max),
        F5 => x
            .windows(2)
            .map(|w| {
                let a = w[1] - w[0] * w[0];
                let b = w[0] - 1.0;
                100.0 * a * a + b * b
            })
            .sum(),
        F6 => x
            .iter()
            .map(|v| {
                let s = libm::floor(v + 0.5);
                s * s
            })
            .sum(),
        F7 => {
            let quartic: f64 = x
                .iter()
                .enumerate()
                .map(|(i, v)| (i + 1) as f64 * v * v * v * v)
                .sum();
            quartic + noise.uniform()
        }
        F8 => x
            .iter()
            .map(|v| -v * libm::sin(libm::sqrt(libm::fabs(*v))))
            .sum(),
        F9 => x
            .iter()
            .map(|v| v * v - 10.0 * libm::cos(2.0 * PI * v) + 10.0)
            .sum(),
        F10 => {
            let sq: f64 = x.iter().map(|v| v * v).sum();
            let cs: f64 = x.iter().map(|v| libm::cos(2.0 * PI * v)).sum();
            -20.0 * libm::exp(-0.2 * libm::sqrt(sq / n)) - libm::exp(cs / n) + 20.0 + E
        }
        F11 => {
            let sq: f64 = x.iter().map(|v| v * v).sum();
            let prod: f64 = x
                .iter()
                .enumerate()
                .map(|(i, v)| libm::cos(v / libm::sqrt((i + 1) as f64)))
                .product();
            sq / 4000.0 - prod + 1.0
        }
        F12 => {
            let y: Vec<f64> = x.iter().map(|v| 1.0 + (v + 1.0) / 4.0).collect();
            let last = y[y.len() - 1] - 1.0;
            let inner: f64 = y
                .windows(2)
                .map(|w| (w[0] - 1.0) * (w[0] - 1.0) * (1.0 + 10.0 * sin2(PI * w[1])))
                .sum();
            let pen: f64 = x.iter().map(|v| penalty(*v, 10.0, 100.0, 4)).sum();
            PI / n * (10.0 * sin2(PI * y[0]) + inner + last * last) + pen
        }
        F13 => {
            let xn = x[x.len() - 1];
            let inner: f64 = x
                .windows(2)
                .map(|w| (w[0] - 1.0) * (w[0] - 1.0) * (1.0 + sin2(3.0 * PI * w[1])))
                .sum();
            let tail = (xn - 1.0) * (xn - 1.0) * (1.0 + sin2(2.0 * PI * xn));
            let pen: f64 = x.iter().map(|v| penalty(*v, 5.0, 100.0, 4)).sum();
            0.1 * (sin2(3.0 * PI * x[0]) + inner + tail) + pen
        }
        F14 => {
            let sum: f64 = (0..25)
                .map(|j| {
                    let a = foxhole(j);
                    let d: f64 = x.iter().zip(a).map(|(v, c)| libm::pow(v - c, 6.0)).sum();
                    1.0 / ((j + 1) as f64 + d)
                })
                .sum();
            1.0 / (1.0 / 500.0 + sum)
        }
        F15 => KOWALIK_A
            .iter()
            .zip(KOWALIK_B_INV)
            .map(|(a, inv)| {
                let b = 1.0 / inv;
                let r = a - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
                r * r
            })
            .sum(),
    }
}

/// A benchmark as an [`Objective`]; owns the noise stream F7 draws from.
#[derive(Debug, Clone)]
pub struct BenchmarkObjective {
    id: BenchmarkId,
    noise: RngStream,
}

impl BenchmarkObjective {
    pub fn new(id: BenchmarkId, noise_seed: u64) -> Self {
        Self {
            id,
            noise: RngStream::new(noise_seed),
        }
    }

    pub fn id(&self) -> BenchmarkId {
        self.id
    }
}

impl Objective for BenchmarkObjective {
    fn evaluate(&mut self, x: &[f64]) -> f64 {
        raw_value(self.id, x, &mut self.noise)
    }
}
