//! Experiment runner for `ingo-core`: configuration files, the ablation,
//! benchmark and sensor-coverage campaigns, and their CSV/JSON/SVG artifacts.

pub mod config;
pub mod error;
pub mod experiments;
pub mod output;

pub use config::{load_experiment_config, ConfigFile, ExperimentConfig, ExperimentKind, Overrides};
pub use error::{HarnessError, Result};
pub use experiments::{
    run_ablation, run_bench, run_experiment, run_wsn_experiment, CellReport, ExperimentReport,
    PartialFailure, TrialRecord,
};
pub use output::emit_outputs;
