//! Population-based optimization around the northern goshawk optimizer (NGO).
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! * the two-phase NGO search plus two optional enhancements, a coupled
//!   Logistic–Sine chaotic initialization and a bidirectional elite / weak
//!   population stage ([`ngo`], [`chaos`]),
//! * canonical baselines: artificial bee colony, firefly, random search
//!   ([`baselines`]),
//! * a 15-function benchmark suite with trial statistics ([`benchmarks`],
//!   [`stats`], [`campaign`]),
//! * a grid-discretized wireless sensor network coverage objective and a
//!   connectivity analysis ([`wsn`]).
//!
//! Every run is driven by a seeded [`RngStream`], so a seed fully determines the
//! result. All objectives are minimized.
//!
//! ```
//! use ingo_core::{ngo, OptimizerConfig, SearchSpace, StrategyFlags};
//!
//! let space = SearchSpace::uniform(2, -30.0, 30.0).unwrap();
//! let config = OptimizerConfig::new(30, 100, 7, StrategyFlags::INGO);
//! let mut sphere = |x: &[f64]| x.iter().map(|v| v * v).sum::<f64>();
//! let result = ngo::run(&config, &mut sphere, &space).unwrap();
//! assert!(result.best_fitness < 1e-3);
//! ```
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod baselines;
pub mod benchmarks;
pub mod campaign;
pub mod chaos;
mod error;
pub mod ngo;
mod population;
mod result;
mod rng;
mod space;
pub mod stats;
pub mod wsn;

pub use crate::error::{Error, Result};
pub use crate::ngo::{OptimizerConfig, StrategyFlags};
pub use crate::population::{
    evaluate_population, rank_and_partition, Agent, Counting, Objective, Partition, Population,
};
pub use crate::result::RunResult;
pub use crate::rng::{RandomSource, RngStream};
pub use crate::space::{clamp_to_bounds, SearchSpace};
