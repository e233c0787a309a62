//! The three experiment families and the report they produce.

use ingo_core::benchmarks::{benchmark_spec, BenchmarkId};
use ingo_core::campaign::{
    in_trial, run_algorithm, run_benchmark_trial, Algorithm, AlgorithmSettings,
};
use ingo_core::stats::{aggregate_stats, TrialStats};
use ingo_core::wsn::{
    connectivity_rate, coverage_objective, decode_deployment, ConnectivityReport, Deployment,
    WsnScenario,
};
use ingo_core::RunResult;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{ExperimentConfig, ExperimentKind};
use crate::error::{HarnessError, Result};

/// Label used for the coverage objective in every table.
pub const WSN_OBJECTIVE: &str = "coverage";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub seed: u64,
    pub fitness: f64,
    pub evaluations: u64,
    pub best_position: Vec<f64>,
    /// Best-so-far fitness after each iteration.
    pub curve: Vec<f64>,
    /// Coverage rate in [0, 1] (wsn only).
    pub coverage: Option<f64>,
    /// Largest connected share of the deployment (wsn only).
    pub eta: Option<f64>,
}

/// Coverage of one algorithm's trials in percent; `best` is the highest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverageSummary {
    pub best: f64,
    pub worst: f64,
    pub mean: f64,
    pub std: f64,
    pub runs: usize,
    /// Trials whose best deployment is a single connected component.
    pub connected_trials: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellReport {
    pub algorithm: Algorithm,
    pub objective: String,
    /// Statistics of the final fitness values in `trials`.
    pub stats: TrialStats,
    pub trials: Vec<TrialRecord>,
    /// Index into `trials` of the best run (lowest fitness, first on ties).
    pub best_trial: usize,
    pub coverage: Option<CoverageSummary>,
    pub deployment: Option<Deployment>,
    pub connectivity: Option<ConnectivityReport>,
}

impl CellReport {
    pub fn best(&self) -> &TrialRecord {
        &self.trials[self.best_trial]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub cells: Vec<CellReport>,
}

/// Dispatch on `config.kind`.
///
/// On a failed trial the returned error carries the cells that did finish,
/// so they can still be written out.
pub fn run_experiment(config: &ExperimentConfig, jobs: Option<usize>) -> Outcome {
    match config.kind {
        ExperimentKind::Ablation | ExperimentKind::Bench => run_benchmarks(config, jobs),
        ExperimentKind::Wsn => run_wsn_experiment(config, jobs),
    }
}

pub type Outcome = std::result::Result<ExperimentReport, Box<PartialFailure>>;

/// A failure together with everything that completed before it.
#[derive(Debug)]
pub struct PartialFailure {
    pub error: HarnessError,
    pub partial: Option<Box<ExperimentReport>>,
}

impl From<HarnessError> for Box<PartialFailure> {
    fn from(error: HarnessError) -> Self {
        Box::new(PartialFailure {
            error,
            partial: None,
        })
    }
}

pub fn run_ablation(config: &ExperimentConfig, jobs: Option<usize>) -> Outcome {
    expect_kind(config, ExperimentKind::Ablation)?;
    run_benchmarks(config, jobs)
}

pub fn run_bench(config: &ExperimentConfig, jobs: Option<usize>) -> Outcome {
    expect_kind(config, ExperimentKind::Bench)?;
    run_benchmarks(config, jobs)
}

fn expect_kind(config: &ExperimentConfig, kind: ExperimentKind) -> Result<()> {
    if config.kind != kind {
        return Err(HarnessError::ConfigInvalid(format!(
            "expected a `{kind}` config, got `{}`",
            config.kind
        )));
    }
    config.validate()
}

struct Task<O> {
    cell: usize,
    algorithm: Algorithm,
    objective: O,
    trial: usize,
}

/// Run every task on a pool of `jobs` threads; results come back in task order.
fn execute<O, F>(
    tasks: Vec<Task<O>>,
    jobs: Option<usize>,
    run: F,
) -> Result<Vec<(usize, ingo_core::Result<TrialRecord>)>>
where
    O: Send + Sync,
    F: Fn(&Task<O>) -> ingo_core::Result<TrialRecord> + Send + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| HarnessError::Pool(e.to_string()))?;
    Ok(pool.install(|| tasks.par_iter().map(|t| (t.cell, run(t))).collect()))
}

fn record(trial: usize, seed: u64, run: RunResult) -> TrialRecord {
    TrialRecord {
        trial,
        seed,
        fitness: run.best_fitness,
        evaluations: run.evaluations,
        best_position: run.best_position,
        curve: run.curve,
        coverage: None,
        eta: None,
    }
}

fn trial_seed(config: &ExperimentConfig, trial: usize) -> u64 {
    config.seed.wrapping_add(trial as u64)
}

fn run_benchmarks(config: &ExperimentConfig, jobs: Option<usize>) -> Outcome {
    config.validate()?;
    let settings = config.settings();
    let mut labels = Vec::new();
    let mut tasks = Vec::new();
    for &algorithm in &config.algorithms {
        for &id in &config.functions {
            let cell = labels.len();
            labels.push((algorithm, id.to_string()));
            tasks.extend((0..config.trials).map(|trial| Task {
                cell,
                algorithm,
                objective: id,
                trial,
            }));
        }
    }
    let results = execute(tasks, jobs, |t: &Task<BenchmarkId>| {
        let seed = trial_seed(config, t.trial);
        let spec = benchmark_spec(t.objective);
        run_benchmark_trial(t.algorithm, spec.id, &settings, seed)
            .map(|run| record(t.trial, seed, run))
            .map_err(|e| in_trial(e, t.algorithm, &spec.id.to_string(), t.trial))
    })?;
    assemble(config, labels, results, |_, _| Ok(()))
}

pub fn run_wsn_experiment(config: &ExperimentConfig, jobs: Option<usize>) -> Outcome {
    expect_kind(config, ExperimentKind::Wsn)?;
    let scenario = config
        .scenario
        .clone()
        .expect("validated wsn config has a scenario");
    let settings = config.settings();
    let space = scenario.search_space().map_err(HarnessError::from)?;
    let mut labels = Vec::new();
    let mut tasks = Vec::new();
    for &algorithm in &config.algorithms {
        let cell = labels.len();
        labels.push((algorithm, WSN_OBJECTIVE.to_string()));
        tasks.extend((0..config.trials).map(|trial| Task {
            cell,
            algorithm,
            objective: (),
            trial,
        }));
    }
    let results = execute(tasks, jobs, |t: &Task<()>| {
        let seed = trial_seed(config, t.trial);
        wsn_trial(t.algorithm, &settings, &scenario, &space, t.trial, seed)
            .map_err(|e| in_trial(e, t.algorithm, WSN_OBJECTIVE, t.trial))
    })?;
    assemble(config, labels, results, |cell, trials| {
        let coverage: Vec<f64> = trials
            .iter()
            .map(|r| 100.0 * r.coverage.unwrap_or(0.0))
            .collect();
        let connected = trials.iter().filter(|r| r.eta == Some(1.0)).count();
        let best = &trials[cell.best_trial];
        let deployment = decode_deployment(&best.best_position, &scenario)?;
        cell.connectivity = Some(connectivity_rate(&deployment, scenario.comm_radius));
        cell.deployment = Some(deployment);
        let stats = aggregate_stats(&coverage)?;
        cell.coverage = Some(CoverageSummary {
            best: stats.worst,
            worst: stats.best,
            mean: stats.mean,
            std: stats.std,
            runs: stats.runs,
            connected_trials: connected,
        });
        Ok(())
    })
}

fn wsn_trial(
    algorithm: Algorithm,
    settings: &AlgorithmSettings,
    scenario: &WsnScenario,
    space: &ingo_core::SearchSpace,
    trial: usize,
    seed: u64,
) -> ingo_core::Result<TrialRecord> {
    let mut objective = coverage_objective(scenario)?;
    let run = run_algorithm(algorithm, settings, seed, &mut objective, space)?;
    let deployment = decode_deployment(&run.best_position, scenario)?;
    let eta = connectivity_rate(&deployment, scenario.comm_radius).eta;
    let mut rec = record(trial, seed, run);
    rec.coverage = Some(1.0 - rec.fitness);
    rec.eta = Some(eta);
    Ok(rec)
}

/// Group trial results into cells, keeping completed cells if any trial failed.
fn assemble<F>(
    config: &ExperimentConfig,
    labels: Vec<(Algorithm, String)>,
    results: Vec<(usize, ingo_core::Result<TrialRecord>)>,
    finish: F,
) -> Outcome
where
    F: Fn(&mut CellReport, &[TrialRecord]) -> ingo_core::Result<()>,
{
    let mut grouped: Vec<Vec<TrialRecord>> = labels.iter().map(|_| Vec::new()).collect();
    let mut failed: Vec<bool> = vec![false; labels.len()];
    let mut first_error = None;
    for (cell, result) in results {
        match result {
            Ok(rec) => grouped[cell].push(rec),
            Err(e) => {
                failed[cell] = true;
                first_error.get_or_insert(e);
            }
        }
    }
    let mut cells = Vec::new();
    for ((i, (algorithm, objective)), trials) in labels.into_iter().enumerate().zip(grouped) {
        if failed[i] {
            continue;
        }
        let finals: Vec<f64> = trials.iter().map(|r| r.fitness).collect();
        let stats = aggregate_stats(&finals).map_err(HarnessError::from)?;
        let best_trial = finals
            .iter()
            .enumerate()
            .fold(0, |b, (k, &f)| if f < finals[b] { k } else { b });
        let mut cell = CellReport {
            algorithm,
            objective,
            stats,
            trials: Vec::new(),
            best_trial,
            coverage: None,
            deployment: None,
            connectivity: None,
        };
        finish(&mut cell, &trials).map_err(HarnessError::from)?;
        cell.trials = trials;
        cells.push(cell);
    }
    let report = ExperimentReport {
        config: config.clone(),
        cells,
    };
    match first_error {
        None => Ok(report),
        Some(e) => Err(Box::new(PartialFailure {
            error: e.into(),
            partial: Some(Box::new(report)),
        })),
    }
}
