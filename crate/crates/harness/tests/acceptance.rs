//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::VecDeque;
use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use ingo_core::benchmarks::{benchmark_spec, evaluate_benchmark, BenchmarkId};
use ingo_core::campaign::{run_algorithm, Algorithm, AlgorithmSettings};
use ingo_core::wsn::{connectivity_rate, coverage_rate, Deployment, Point, WsnScenario};
use ingo_core::{Objective, RandomSource, RngStream, SearchSpace};
use ingo_harness::{
    emit_outputs, run_experiment, CellReport, ExperimentConfig, ExperimentKind, ExperimentReport,
};

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn run(config: &ExperimentConfig) -> ExperimentReport {
    run_experiment(config, None)
        .map_err(|f| f.error)
        .expect("experiment runs")
}

fn cell<'a>(report: &'a ExperimentReport, algorithm: Algorithm, objective: &str) -> &'a CellReport {
    report
        .cells
        .iter()
        .find(|c| c.algorithm == algorithm && c.objective == objective)
        .expect("cell present")
}

struct NoNoise;

impl RandomSource for NoNoise {
    fn uniform(&mut self) -> f64 {
        0.0
    }
}

fn exact_optima() -> Verdict {
    let mut worst = String::new();
    let mut pass = true;
    let mut checked = 0;
    for id in BenchmarkId::ALL {
        let spec = benchmark_spec(id);
        let (Some(x), Some(optimum)) = (spec.known_optimizer.clone(), spec.known_optimum) else {
            continue;
        };
        if id == BenchmarkId::F7 {
            continue;
        }
        let tol = if id == BenchmarkId::F8 { 1e-2 } else { 1e-12 };
        let err = (evaluate_benchmark(id, &x, &mut NoNoise).unwrap() - optimum).abs();
        checked += 1;
        if err > tol {
            pass = false;
            worst += &format!(" {id} off by {err:e};");
        }
    }
    verdict(pass, format!("{checked} functions checked{worst}"))
}

fn ablation_report() -> ExperimentReport {
    let config = ExperimentConfig {
        functions: vec![
            BenchmarkId::F1,
            BenchmarkId::F11,
            BenchmarkId::F12,
            BenchmarkId::F13,
            BenchmarkId::F14,
        ],
        ..ExperimentConfig::defaults(ExperimentKind::Ablation)
    };
    assert_eq!(
        (config.trials, config.t_max, config.population),
        (20, 500, 30)
    );
    run(&config)
}

fn f11_means(report: &ExperimentReport) -> Verdict {
    let means: Vec<String> = Algorithm::ABLATION
        .iter()
        .map(|&a| format!("{a} {:.2e}", cell(report, a, "F11").stats.mean))
        .collect();
    let pass = Algorithm::ABLATION
        .iter()
        .all(|&a| cell(report, a, "F11").stats.mean < 1e-10);
    verdict(pass, means.join(", "))
}

fn f14_means(report: &ExperimentReport) -> Verdict {
    let means: Vec<String> = Algorithm::ABLATION
        .iter()
        .map(|&a| format!("{a} {:.6}", cell(report, a, "F14").stats.mean))
        .collect();
    let pass = Algorithm::ABLATION
        .iter()
        .all(|&a| (cell(report, a, "F14").stats.mean - 0.9980).abs() <= 1e-3);
    verdict(pass, means.join(", "))
}

fn f1_ingo(report: &ExperimentReport) -> Verdict {
    let mean = cell(report, Algorithm::Ingo, "F1").stats.mean;
    verdict(mean < 1e-60, format!("INGO mean {mean:.3e}"))
}

fn penalized_ordering(report: &ExperimentReport) -> Verdict {
    let mut pass = true;
    let mut parts = Vec::new();
    for f in ["F12", "F13"] {
        let ngo = cell(report, Algorithm::Ngo, f).stats.mean;
        for a in [Algorithm::IngoBped, Algorithm::Ingo] {
            let mean = cell(report, a, f).stats.mean;
            pass &= mean * 10.0 <= ngo && mean < ngo;
            parts.push(format!(
                "{f} {a} {mean:.2e} vs NGO {ngo:.2e} ({:.0}x)",
                ngo / mean
            ));
        }
    }
    verdict(pass, parts.join(", "))
}

fn wsn_report() -> ExperimentReport {
    let config = ExperimentConfig {
        algorithms: vec![Algorithm::Ingo, Algorithm::Ngo],
        trials: 10,
        ..ExperimentConfig::defaults(ExperimentKind::Wsn)
    };
    assert_eq!(config.scenario, Some(WsnScenario::default()));
    run(&config)
}

fn wsn_coverage(report: &ExperimentReport) -> Verdict {
    let ingo = cell(report, Algorithm::Ingo, "coverage")
        .coverage
        .as_ref()
        .unwrap()
        .mean;
    let ngo = cell(report, Algorithm::Ngo, "coverage")
        .coverage
        .as_ref()
        .unwrap()
        .mean;
    verdict(
        ingo >= 88.0 && ingo - ngo >= 3.0,
        format!("INGO {ingo:.2}%, NGO {ngo:.2}%, gap {:.2} pp", ingo - ngo),
    )
}

/// Size of the largest set of nodes reachable from one another by hops shorter than `rc`.
fn reachable_largest(nodes: &[Point], rc: f64) -> usize {
    let n = nodes.len();
    let linked = |a: Point, b: Point| ((a.x - b.x).powi(2) + (a.y - b.y).powi(2)).sqrt() < rc;
    let mut best = 0;
    for start in 0..n {
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if !seen[j] && linked(nodes[i], nodes[j]) {
                    seen[j] = true;
                    count += 1;
                    queue.push_back(j);
                }
            }
        }
        best = best.max(count);
    }
    best
}

fn wsn_connectivity(report: &ExperimentReport) -> Verdict {
    let scenario = report.config.scenario.clone().unwrap();
    let ingo = cell(report, Algorithm::Ingo, "coverage");
    let mut connected = 0;
    let mut agree = true;
    for t in &ingo.trials {
        let nodes: Vec<Point> = t
            .best_position
            .chunks(2)
            .map(|c| Point::new(c[0], c[1]))
            .collect();
        let largest = reachable_largest(&nodes, scenario.comm_radius);
        agree &= t.eta == Some(largest as f64 / nodes.len() as f64);
        if largest == nodes.len() {
            connected += 1;
        }
    }
    verdict(
        connected >= 8 && agree,
        format!(
            "{connected}/{} INGO trials fully connected, harness agrees with oracle: {agree}",
            ingo.trials.len()
        ),
    )
}

fn brute_coverage(scenario: &WsnScenario, nodes: &[Point]) -> f64 {
    let cols = (scenario.length / scenario.grid_step + 1e-9).floor() as usize;
    let rows = (scenario.width / scenario.grid_step + 1e-9).floor() as usize;
    let mut hit = 0;
    for r in 0..rows {
        for c in 0..cols {
            let (px, py) = (
                (c as f64 + 0.5) * scenario.grid_step,
                (r as f64 + 0.5) * scenario.grid_step,
            );
            let nearest = nodes
                .iter()
                .map(|n| ((n.x - px).powi(2) + (n.y - py).powi(2)).sqrt())
                .fold(f64::INFINITY, f64::min);
            hit += usize::from(nearest <= scenario.sensing_radius);
        }
    }
    hit as f64 / (rows * cols) as f64
}

/// Component partition as sets of node indices, via transitive closure.
fn brute_components(nodes: &[Point], rc: f64) -> Vec<Vec<usize>> {
    let n = nodes.len();
    let mut reach: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    i == j
                        || ((nodes[i].x - nodes[j].x).powi(2) + (nodes[i].y - nodes[j].y).powi(2))
                            .sqrt()
                            < rc
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        let via = reach[k].clone();
        for row in reach.iter_mut().filter(|row| row[k]) {
            for (r, &v) in row.iter_mut().zip(&via) {
                *r |= v;
            }
        }
    }
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for (i, row) in reach.iter().enumerate() {
        if !comps.iter().any(|c| c.contains(&i)) {
            comps.push((0..n).filter(|&j| row[j]).collect());
        }
    }
    comps
}

fn oracle_equivalence() -> Verdict {
    let mut rng = RngStream::new(2024);
    let mut mismatches = Vec::new();
    for case in 0..100 {
        let step = [0.5, 0.8, 1.0][rng.below(3)];
        let cells_x = 4 + rng.below(17);
        let cells_y = 4 + rng.below(17);
        let (length, width) = (cells_x as f64 * step, cells_y as f64 * step);
        let n = 1 + rng.below(10);
        // Half the cases snap coordinates and radii to a lattice so distances hit the radii exactly.
        let snapped = case % 2 == 0;
        let radius = if snapped {
            (1 + rng.below(3)) as f64 * step
        } else {
            0.3 + 3.0 * rng.uniform()
        };
        let rc = if snapped {
            (2 + rng.below(5)) as f64 * step
        } else {
            2.0 * radius + 2.0 * rng.uniform()
        };
        let scenario = WsnScenario {
            length,
            width,
            nodes: n,
            sensing_radius: radius,
            comm_radius: rc,
            grid_step: step,
        };
        let nodes: Vec<Point> = (0..n)
            .map(|_| {
                if snapped {
                    Point::new(
                        (rng.below(cells_x) as f64 + 0.5) * step,
                        (rng.below(cells_y) as f64 + 0.5) * step,
                    )
                } else {
                    Point::new(rng.uniform() * length, rng.uniform() * width)
                }
            })
            .collect();
        let d = Deployment::new(nodes.clone());
        if coverage_rate(&d, &scenario).unwrap() != brute_coverage(&scenario, &nodes) {
            mismatches.push(format!("coverage case {case}"));
        }
        let report = connectivity_rate(&d, rc);
        let expected = brute_components(&nodes, rc);
        let same_partition = expected.iter().all(|comp| {
            comp.iter()
                .all(|&i| report.labels[i] == report.labels[comp[0]])
        }) && report.component_sizes.len() == expected.len();
        let mut sizes: Vec<usize> = expected.iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        if !same_partition || report.component_sizes != sizes {
            mismatches.push(format!("connectivity case {case}"));
        }
    }
    verdict(
        mismatches.is_empty(),
        format!("100 deployments, mismatches: {mismatches:?}"),
    )
}

fn determinism() -> Verdict {
    let configs = [
        ExperimentConfig {
            functions: vec![BenchmarkId::F7, BenchmarkId::F15],
            trials: 3,
            t_max: 40,
            ..ExperimentConfig::defaults(ExperimentKind::Ablation)
        },
        ExperimentConfig {
            algorithms: Algorithm::ALL.to_vec(),
            functions: vec![BenchmarkId::F5],
            trials: 2,
            t_max: 40,
            seed: 77,
            ..ExperimentConfig::defaults(ExperimentKind::Bench)
        },
        ExperimentConfig {
            trials: 2,
            t_max: 20,
            seed: 5,
            ..ExperimentConfig::defaults(ExperimentKind::Wsn)
        },
    ];
    let mut differing = Vec::new();
    for config in &configs {
        let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
        for (jobs, dir) in [Some(1), None].into_iter().zip(&dirs) {
            let report = run_experiment(config, jobs).map_err(|f| f.error).unwrap();
            emit_outputs(&report, dir.path(), false).unwrap();
        }
        for name in ["stats.csv", "raw.csv", "curves.csv"] {
            let [a, b] = [&dirs[0], &dirs[1]].map(|d| fs::read(d.path().join(name)).unwrap());
            if a != b || a.is_empty() {
                differing.push(format!("{} {name}", config.kind));
            }
        }
    }
    verdict(
        differing.is_empty(),
        format!("3 experiment kinds rerun, differing files: {differing:?}"),
    )
}

/// Evaluates a rugged test function and records whether any query left the box.
struct Guard<'a> {
    space: &'a SearchSpace,
    shape: usize,
    escaped: bool,
}

impl Objective for Guard<'_> {
    fn evaluate(&mut self, x: &[f64]) -> f64 {
        self.escaped |= !self.space.contains(x);
        match self.shape {
            0 => x.iter().map(|v| v * v).sum(),
            1 => x
                .iter()
                .map(|v| v * v - 10.0 * (2.0 * std::f64::consts::PI * v).cos() + 10.0)
                .sum(),
            2 => x
                .iter()
                .enumerate()
                .map(|(i, v)| (v - i as f64).abs())
                .sum::<f64>(),
            _ => -x.iter().map(|v| v.abs().sqrt() * v.sin()).sum::<f64>(),
        }
    }
}

fn monotone_fragments() -> Verdict {
    let mut rng = RngStream::new(99);
    let mut failures = Vec::new();
    for k in 0..1000 {
        let algorithm = Algorithm::ALL[k % Algorithm::ALL.len()];
        let dim = 1 + rng.below(6);
        let lower: Vec<f64> = (0..dim).map(|_| -10.0 + 10.0 * rng.uniform()).collect();
        let upper: Vec<f64> = lower
            .iter()
            .map(|l| l + 0.01 + 10.0 * rng.uniform())
            .collect();
        let space = SearchSpace::new(lower, upper).unwrap();
        let settings = AlgorithmSettings::new(5 + rng.below(10), 1 + rng.below(12));
        let mut guard = Guard {
            space: &space,
            shape: rng.below(4),
            escaped: false,
        };
        let seed = rng.below(1 << 30) as u64;
        let result = run_algorithm(algorithm, &settings, seed, &mut guard, &space).unwrap();
        let monotone = result.curve.windows(2).all(|w| w[1] <= w[0]);
        let ok = monotone
            && !guard.escaped
            && result.curve.len() == settings.t_max
            && space.contains(&result.best_position)
            && result.curve.last() == Some(&result.best_fitness);
        if !ok {
            failures.push(format!("fragment {k} ({algorithm})"));
        }
    }
    verdict(
        failures.is_empty(),
        format!("1000 fragments, failures: {failures:?}"),
    )
}

fn main() -> ExitCode {
    let started = Instant::now();
    let mut results: Vec<(usize, &str, Verdict)> = Vec::new();
    results.push((1, "exact optima", exact_optima()));
    let ablation = ablation_report();
    results.push((
        2,
        "F11 mean below 1e-10, all variants",
        f11_means(&ablation),
    ));
    results.push((
        3,
        "F14 mean 0.9980 +- 1e-3, all variants",
        f14_means(&ablation),
    ));
    results.push((4, "F1 INGO mean below 1e-60", f1_ingo(&ablation)));
    results.push((
        5,
        "F12/F13 BPED variants 10x below NGO",
        penalized_ordering(&ablation),
    ));
    let wsn = wsn_report();
    results.push((
        6,
        "WSN INGO coverage >= 88% and >= 3 pp over NGO",
        wsn_coverage(&wsn),
    ));
    results.push((
        7,
        "WSN INGO fully connected in >= 8/10 trials",
        wsn_connectivity(&wsn),
    ));
    results.push((8, "coverage and connectivity oracles", oracle_equivalence()));
    results.push((9, "byte-identical CSVs on rerun", determinism()));
    results.push((
        10,
        "monotone curves and in-bounds queries",
        monotone_fragments(),
    ));

    let mut failed = 0;
    for (id, name, v) in &results {
        println!(
            "criterion {id:>2} {} {name}: {}",
            if v.pass { "PASS" } else { "FAIL" },
            v.detail
        );
        failed += usize::from(!v.pass);
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1?}",
        results.len() - failed,
        started.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
