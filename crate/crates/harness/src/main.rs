use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ingo_core::benchmarks::BenchmarkId;
use ingo_core::campaign::Algorithm;
use ingo_harness::{
    emit_outputs, run_experiment, ConfigFile, ExperimentKind, HarnessError, Overrides,
};

#[derive(Parser)]
#[command(
    name = "ingo",
    version,
    about = "Run INGO ablation, benchmark and WSN coverage experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare algorithms on the benchmark suite.
    Bench(RunArgs),
    /// Strategy ablation (NGO, INGO-DCMIS, INGO-BPED, INGO) on the benchmark suite.
    Ablate(RunArgs),
    /// Sensor-node deployment for area coverage.
    Wsn(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// JSON experiment config; flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Experiment kind; must agree with the subcommand.
    #[arg(long)]
    kind: Option<ExperimentKind>,
    /// Algorithm to run (repeatable): NGO, INGO-DCMIS, INGO-BPED, INGO, ABC, FA, RS.
    #[arg(long = "algo")]
    algorithms: Vec<Algorithm>,
    /// Benchmark function to run (repeatable), e.g. F12.
    #[arg(long = "func")]
    functions: Vec<BenchmarkId>,
    #[arg(long)]
    trials: Option<usize>,
    /// Iteration budget per run.
    #[arg(long)]
    iters: Option<usize>,
    /// Population size.
    #[arg(long)]
    pop: Option<usize>,
    /// Base seed; trial i uses seed + i.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Skip the SVG renders.
    #[arg(long)]
    no_svg: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (kind, args) = match cli.command {
        Command::Bench(a) => (ExperimentKind::Bench, a),
        Command::Ablate(a) => (ExperimentKind::Ablation, a),
        Command::Wsn(a) => (ExperimentKind::Wsn, a),
    };
    match execute(kind, args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn execute(kind: ExperimentKind, args: RunArgs) -> Result<(), HarnessError> {
    if let Some(k) = args.kind {
        if k != kind {
            return Err(HarnessError::ConfigInvalid(format!(
                "--kind {k} conflicts with the `{kind}` subcommand"
            )));
        }
    }
    let file = match &args.config {
        Some(path) => ConfigFile::read(path)?,
        None => ConfigFile::default(),
    };
    let overrides = Overrides {
        kind: Some(kind),
        algorithms: args.algorithms,
        functions: args.functions,
        trials: args.trials,
        t_max: args.iters,
        population: args.pop,
        seed: args.seed,
        output: args.out,
    };
    let config = file.resolve(&overrides)?;
    if args.jobs == Some(0) {
        return Err(HarnessError::ConfigInvalid(
            "--jobs must be at least 1".into(),
        ));
    }
    let report = match run_experiment(&config, args.jobs) {
        Ok(report) => report,
        Err(failure) => {
            if let Some(partial) = failure.partial {
                emit_outputs(&partial, &config.output, !args.no_svg)?;
                eprintln!("partial results written to {}", config.output.display());
            }
            return Err(failure.error);
        }
    };
    emit_outputs(&report, &config.output, !args.no_svg)?;
    for cell in &report.cells {
        let s = &cell.stats;
        match &cell.coverage {
            Some(c) => println!(
                "{:<10} {:<9} coverage mean {:.2}% best {:.2}% connected {}/{}",
                cell.algorithm.to_string(),
                cell.objective,
                c.mean,
                c.best,
                c.connected_trials,
                s.runs
            ),
            None => println!(
                "{:<10} {:<9} mean {:.4e} std {:.4e} best {:.4e} worst {:.4e}",
                cell.algorithm.to_string(),
                cell.objective,
                s.mean,
                s.std,
                s.best,
                s.worst
            ),
        }
    }
    println!("results written to {}", config.output.display());
    Ok(())
}
