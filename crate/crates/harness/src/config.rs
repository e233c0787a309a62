//! Experiment configuration: a single JSON document, defaulted per experiment kind.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use ingo_core::baselines::FireflyParams;
use ingo_core::benchmarks::BenchmarkId;
use ingo_core::campaign::{Algorithm, AlgorithmSettings};
use ingo_core::wsn::WsnScenario;
use ingo_core::OptimizerConfig;
use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExperimentKind {
    Ablation,
    Wsn,
    Bench,
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Ablation => "ablation",
            Self::Wsn => "wsn",
            Self::Bench => "bench",
        })
    }
}

impl FromStr for ExperimentKind {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ablation" | "ablate" => Ok(Self::Ablation),
            "wsn" => Ok(Self::Wsn),
            "bench" => Ok(Self::Bench),
            other => Err(HarnessError::ConfigInvalid(format!(
                "unknown experiment kind `{other}`"
            ))),
        }
    }
}

/// A fully resolved experiment. Serializing it and loading the result back
/// yields an equal value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub kind: ExperimentKind,
    pub algorithms: Vec<Algorithm>,
    /// Benchmarks for `ablation` and `bench`; empty for `wsn`.
    pub functions: Vec<BenchmarkId>,
    /// Present for `wsn` only.
    pub scenario: Option<WsnScenario>,
    pub trials: usize,
    pub t_max: usize,
    pub population: usize,
    pub seed: u64,
    pub elite_frac: f64,
    pub weak_frac: f64,
    pub abc_limit: Option<usize>,
    pub firefly: FireflyParams,
    pub output: PathBuf,
}

/// Partial scenario as written in a config file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    length: Option<f64>,
    width: Option<f64>,
    nodes: Option<usize>,
    sensing_radius: Option<f64>,
    comm_radius: Option<f64>,
    grid_step: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FireflyFile {
    alpha: Option<f64>,
    alpha_decay: Option<f64>,
    beta0: Option<f64>,
    gamma: Option<f64>,
}

/// Every key optional; missing keys take the kind's defaults.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    kind: Option<ExperimentKind>,
    algorithms: Option<Vec<Algorithm>>,
    functions: Option<Vec<BenchmarkId>>,
    scenario: Option<ScenarioFile>,
    trials: Option<usize>,
    t_max: Option<usize>,
    population: Option<usize>,
    seed: Option<u64>,
    elite_frac: Option<f64>,
    weak_frac: Option<f64>,
    abc_limit: Option<usize>,
    firefly: Option<FireflyFile>,
    output: Option<PathBuf>,
}

/// Command-line values that take precedence over the file.
#[derive(Debug, Default, Clone)]
pub struct Overrides {
    pub kind: Option<ExperimentKind>,
    pub algorithms: Vec<Algorithm>,
    pub functions: Vec<BenchmarkId>,
    pub trials: Option<usize>,
    pub t_max: Option<usize>,
    pub population: Option<usize>,
    pub seed: Option<u64>,
    pub output: Option<PathBuf>,
}

impl ConfigFile {
    pub fn parse(text: &str, path: &Path) -> Result<Self> {
        serde_json::from_str(text).map_err(|source| HarnessError::ConfigSyntax {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| HarnessError::ConfigRead {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text, path)
    }

    /// Apply `overrides`, fill defaults for the resulting kind and validate.
    pub fn resolve(self, overrides: &Overrides) -> Result<ExperimentConfig> {
        let kind = match (overrides.kind, self.kind) {
            (Some(cli), Some(file)) if cli != file => {
                return Err(HarnessError::ConfigInvalid(format!(
                    "config file describes a `{file}` experiment but `{cli}` was requested"
                )))
            }
            (Some(k), _) | (None, Some(k)) => k,
            (None, None) => {
                return Err(HarnessError::ConfigInvalid(
                    "experiment kind is not set".into(),
                ))
            }
        };
        let defaults = ExperimentConfig::defaults(kind);
        let firefly = match self.firefly {
            None => defaults.firefly,
            Some(f) => FireflyParams {
                alpha: f.alpha.unwrap_or(defaults.firefly.alpha),
                alpha_decay: f.alpha_decay.unwrap_or(defaults.firefly.alpha_decay),
                beta0: f.beta0.unwrap_or(defaults.firefly.beta0),
                gamma: f.gamma.unwrap_or(defaults.firefly.gamma),
            },
        };
        let scenario = match (kind, self.scenario) {
            (ExperimentKind::Wsn, file) => {
                let d = WsnScenario::default();
                let s = file.unwrap_or_default();
                Some(WsnScenario {
                    length: s.length.unwrap_or(d.length),
                    width: s.width.unwrap_or(d.width),
                    nodes: s.nodes.unwrap_or(d.nodes),
                    sensing_radius: s.sensing_radius.unwrap_or(d.sensing_radius),
                    comm_radius: s.comm_radius.unwrap_or(d.comm_radius),
                    grid_step: s.grid_step.unwrap_or(d.grid_step),
                })
            }
            (_, Some(_)) => {
                return Err(HarnessError::ConfigInvalid(format!(
                    "`scenario` only applies to wsn experiments, not `{kind}`"
                )))
            }
            (_, None) => None,
        };
        let functions = if !overrides.functions.is_empty() {
            overrides.functions.clone()
        } else {
            self.functions.unwrap_or(defaults.functions)
        };
        if kind == ExperimentKind::Wsn && !functions.is_empty() {
            return Err(HarnessError::ConfigInvalid(
                "`functions` does not apply to wsn experiments".into(),
            ));
        }
        let config = ExperimentConfig {
            kind,
            algorithms: if overrides.algorithms.is_empty() {
                self.algorithms.unwrap_or(defaults.algorithms)
            } else {
                overrides.algorithms.clone()
            },
            functions,
            scenario,
            trials: overrides.trials.or(self.trials).unwrap_or(defaults.trials),
            t_max: overrides.t_max.or(self.t_max).unwrap_or(defaults.t_max),
            population: overrides
                .population
                .or(self.population)
                .unwrap_or(defaults.population),
            seed: overrides.seed.or(self.seed).unwrap_or(defaults.seed),
            elite_frac: self.elite_frac.unwrap_or(defaults.elite_frac),
            weak_frac: self.weak_frac.unwrap_or(defaults.weak_frac),
            abc_limit: self.abc_limit.or(defaults.abc_limit),
            firefly,
            output: overrides
                .output
                .clone()
                .or(self.output)
                .unwrap_or(defaults.output),
        };
        config.validate()?;
        Ok(config)
    }
}

/// Read, default and validate a config file.
pub fn load_experiment_config(path: &Path) -> Result<ExperimentConfig> {
    ConfigFile::read(path)?.resolve(&Overrides::default())
}

impl ExperimentConfig {
    /// Ablation: 20 trials of the four strategy variants on all fifteen
    /// functions. Wsn: 30 trials on the default scenario. Both 500 iterations
    /// with 30 agents.
    pub fn defaults(kind: ExperimentKind) -> Self {
        let (algorithms, functions, scenario, trials) = match kind {
            ExperimentKind::Ablation => (
                Algorithm::ABLATION.to_vec(),
                BenchmarkId::ALL.to_vec(),
                None,
                20,
            ),
            ExperimentKind::Bench => (comparison_set(), BenchmarkId::ALL.to_vec(), None, 20),
            ExperimentKind::Wsn => (
                comparison_set(),
                Vec::new(),
                Some(WsnScenario::default()),
                30,
            ),
        };
        Self {
            kind,
            algorithms,
            functions,
            scenario,
            trials,
            t_max: 500,
            population: 30,
            seed: 0,
            elite_frac: OptimizerConfig::DEFAULT_ELITE_FRAC,
            weak_frac: OptimizerConfig::DEFAULT_WEAK_FRAC,
            abc_limit: None,
            firefly: FireflyParams::default(),
            output: PathBuf::from("results").join(kind.to_string()),
        }
    }

    pub fn settings(&self) -> AlgorithmSettings {
        AlgorithmSettings {
            n: self.population,
            t_max: self.t_max,
            elite_frac: self.elite_frac,
            weak_frac: self.weak_frac,
            abc_limit: self.abc_limit,
            firefly: self.firefly,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(HarnessError::ConfigInvalid(msg));
        if self.algorithms.is_empty() {
            return invalid("at least one algorithm is required".into());
        }
        if self.trials == 0 {
            return invalid("trials must be at least 1".into());
        }
        match (self.kind, &self.scenario) {
            (ExperimentKind::Wsn, Some(s)) => s
                .validate()
                .map_err(|e| HarnessError::ConfigInvalid(e.to_string()))?,
            (ExperimentKind::Wsn, None) => {
                return invalid("wsn experiments need a scenario".into())
            }
            (_, Some(_)) => return invalid("`scenario` only applies to wsn experiments".into()),
            (_, None) if self.functions.is_empty() => {
                return invalid("at least one benchmark function is required".into())
            }
            _ => {}
        }
        let settings = self.settings();
        for &algorithm in &self.algorithms {
            let checked = match algorithm.flags() {
                Some(flags) => settings.optimizer_config(self.seed, flags).validate(),
                None => settings.baseline_config(self.seed).validate(),
            };
            checked.map_err(|e| HarnessError::ConfigInvalid(format!("{algorithm}: {e}")))?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }
}

/// Default comparison set for `bench` and `wsn`.
fn comparison_set() -> Vec<Algorithm> {
    vec![
        Algorithm::Ngo,
        Algorithm::Ingo,
        Algorithm::Abc,
        Algorithm::Fa,
    ]
}
