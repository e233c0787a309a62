//! Algorithm registry and repeated-trial campaigns over the benchmark suite.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::baselines::{abc_run, fa_run, random_search_run, BaselineConfig, FireflyParams};
use crate::benchmarks::{benchmark_spec, BenchmarkId, BenchmarkObjective};
use crate::error::{Error, Result};
use crate::ngo::{self, OptimizerConfig, StrategyFlags};
use crate::population::Objective;
use crate::result::RunResult;
use crate::rng::RngStream;
use crate::space::SearchSpace;
use crate::stats::{aggregate_stats, TrialStats};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Algorithm {
    #[cfg_attr(feature = "serde", serde(rename = "NGO"))]
    Ngo,
    #[cfg_attr(feature = "serde", serde(rename = "INGO-DCMIS"))]
    IngoDcmis,
    #[cfg_attr(feature = "serde", serde(rename = "INGO-BPED"))]
    IngoBped,
    #[cfg_attr(feature = "serde", serde(rename = "INGO"))]
    Ingo,
    #[cfg_attr(feature = "serde", serde(rename = "ABC"))]
    Abc,
    #[cfg_attr(feature = "serde", serde(rename = "FA"))]
    Fa,
    #[cfg_attr(feature = "serde", serde(rename = "RS"))]
    RandomSearch,
}

impl Algorithm {
    pub const ALL: [Algorithm; 7] = [
        Self::Ngo,
        Self::IngoDcmis,
        Self::IngoBped,
        Self::Ingo,
        Self::Abc,
        Self::Fa,
        Self::RandomSearch,
    ];
    pub const ABLATION: [Algorithm; 4] = [Self::Ngo, Self::IngoDcmis, Self::IngoBped, Self::Ingo];

    pub fn name(self) -> &'static str {
        match self {
            Self::Ngo => "NGO",
            Self::IngoDcmis => "INGO-DCMIS",
            Self::IngoBped => "INGO-BPED",
            Self::Ingo => "INGO",
            Self::Abc => "ABC",
            Self::Fa => "FA",
            Self::RandomSearch => "RS",
        }
    }

    /// Ablation flags for the goshawk variants, `None` for baselines.
    pub fn flags(self) -> Option<StrategyFlags> {
        match self {
            Self::Ngo => Some(StrategyFlags::NGO),
            Self::IngoDcmis => Some(StrategyFlags::INGO_DCMIS),
            Self::IngoBped => Some(StrategyFlags::INGO_BPED),
            Self::Ingo => Some(StrategyFlags::INGO),
            _ => None,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let canon = s.trim().to_ascii_uppercase().replace('_', "-");
        Self::ALL
            .into_iter()
            .find(|a| a.name() == canon)
            .or(match canon.as_str() {
                "RANDOM" | "RANDOM-SEARCH" => Some(Self::RandomSearch),
                _ => None,
            })
            .ok_or_else(|| Error::InvalidArgument(alloc::format!("unknown algorithm `{s}`")))
    }
}

/// Everything but the seed that a run of any [`Algorithm`] needs.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AlgorithmSettings {
    pub n: usize,
    pub t_max: usize,
    pub elite_frac: f64,
    pub weak_frac: f64,
    pub abc_limit: Option<usize>,
    pub firefly: FireflyParams,
}

impl AlgorithmSettings {
    pub fn new(n: usize, t_max: usize) -> Self {
        Self {
            n,
            t_max,
            elite_frac: OptimizerConfig::DEFAULT_ELITE_FRAC,
            weak_frac: OptimizerConfig::DEFAULT_WEAK_FRAC,
            abc_limit: None,
            firefly: FireflyParams::default(),
        }
    }

    pub fn optimizer_config(&self, seed: u64, flags: StrategyFlags) -> OptimizerConfig {
        OptimizerConfig {
            n: self.n,
            t_max: self.t_max,
            elite_frac: self.elite_frac,
            weak_frac: self.weak_frac,
            seed,
            flags,
        }
    }

    pub fn baseline_config(&self, seed: u64) -> BaselineConfig {
        BaselineConfig {
            n: self.n,
            t_max: self.t_max,
            seed,
            abc_limit: self.abc_limit,
            firefly: self.firefly,
        }
    }
}

/// One run of `algorithm` with the given seed.
pub fn run_algorithm<O: Objective + ?Sized>(
    algorithm: Algorithm,
    settings: &AlgorithmSettings,
    seed: u64,
    objective: &mut O,
    space: &SearchSpace,
) -> Result<RunResult> {
    match algorithm.flags() {
        Some(flags) => ngo::run(&settings.optimizer_config(seed, flags), objective, space),
        None => {
            let config = settings.baseline_config(seed);
            match algorithm {
                Algorithm::Abc => abc_run(&config, objective, space),
                Algorithm::Fa => fa_run(&config, objective, space),
                _ => random_search_run(&config, objective, space),
            }
        }
    }
}

/// Stream tag separating benchmark noise from the optimizer's own draws.
const NOISE_TAG: u64 = 0x004E_4F49_5345;

/// One trial of `algorithm` on benchmark `id`.
pub fn run_benchmark_trial(
    algorithm: Algorithm,
    id: BenchmarkId,
    settings: &AlgorithmSettings,
    seed: u64,
) -> Result<RunResult> {
    let spec = benchmark_spec(id);
    let mut objective = BenchmarkObjective::new(id, RngStream::derive(seed, NOISE_TAG).seed());
    run_algorithm(algorithm, settings, seed, &mut objective, &spec.space())
}

/// Tag a failure with its campaign coordinates.
pub fn in_trial(err: Error, algorithm: Algorithm, objective: &str, trial: usize) -> Error {
    Error::Trial {
        algorithm: algorithm.name().to_string(),
        objective: objective.to_string(),
        trial,
        source: Box::new(err),
    }
}

/// Results of one (algorithm, objective) cell of a campaign.
#[derive(Debug, Clone, PartialEq)]
pub struct CampaignCell {
    pub algorithm: Algorithm,
    pub objective: String,
    pub stats: TrialStats,
    /// Final best fitness of every trial, in trial order.
    pub finals: Vec<f64>,
    pub runs: Vec<RunResult>,
}

/// `trials` runs of every algorithm on every benchmark; trial `i` uses seed
/// `base_seed + i` for all algorithms.
pub fn run_campaign(
    algorithms: &[Algorithm],
    functions: &[BenchmarkId],
    trials: usize,
    base_seed: u64,
    settings: &AlgorithmSettings,
) -> Result<Vec<CampaignCell>> {
    if trials == 0 {
        return Err(Error::Configuration(
            "a campaign needs at least one trial".into(),
        ));
    }
    let mut cells = Vec::with_capacity(algorithms.len() * functions.len());
    for &algorithm in algorithms {
        for &id in functions {
            let label = id.to_string();
            let runs = (0..trials)
                .map(|trial| {
                    run_benchmark_trial(
                        algorithm,
                        id,
                        settings,
                        base_seed.wrapping_add(trial as u64),
                    )
                    .map_err(|e| in_trial(e, algorithm, &label, trial))
                })
                .collect::<Result<Vec<_>>>()?;
            let finals: Vec<f64> = runs.iter().map(|r| r.best_fitness).collect();
            cells.push(CampaignCell {
                algorithm,
                objective: label,
                stats: aggregate_stats(&finals)?,
                finals,
                runs,
            });
        }
    }
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert_eq!(
            "ingo_bped".parse::<Algorithm>().unwrap(),
            Algorithm::IngoBped
        );
        assert_eq!(
            "random".parse::<Algorithm>().unwrap(),
            Algorithm::RandomSearch
        );
        assert!("IWHO".parse::<Algorithm>().is_err());
    }

    #[test]
    fn singleton_campaign() {
        let settings = AlgorithmSettings::new(10, 5);
        let cells = run_campaign(&[Algorithm::Ngo], &[BenchmarkId::F1], 1, 3, &settings).unwrap();
        assert_eq!(cells.len(), 1);
        let s = cells[0].stats;
        assert_eq!(s.best, s.worst);
        assert_eq!(s.best, s.mean);
        assert_eq!(s.std, 0.0);
        assert_eq!(cells[0].finals, [cells[0].runs[0].best_fitness]);
    }

    #[test]
    fn zero_trials_rejected() {
        let settings = AlgorithmSettings::new(10, 5);
        assert!(run_campaign(&[Algorithm::Ngo], &[BenchmarkId::F1], 0, 3, &settings).is_err());
    }

    #[test]
    fn failures_carry_context() {
        let settings = AlgorithmSettings::new(3, 5);
        let err =
            run_campaign(&[Algorithm::Ingo], &[BenchmarkId::F2], 2, 0, &settings).unwrap_err();
        match err {
            Error::Trial {
                algorithm,
                objective,
                trial,
                ..
            } => {
                assert_eq!(
                    (algorithm.as_str(), objective.as_str(), trial),
                    ("INGO", "F2", 0)
                );
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
