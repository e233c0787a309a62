//! CSV, JSON and SVG artifacts of an [`ExperimentReport`].

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use ingo_core::wsn::{distance, WsnScenario};

use crate::config::ExperimentKind;
use crate::error::{HarnessError, Result};
use crate::experiments::{CellReport, ExperimentReport};

/// Locale-free float text that parses back to the same value.
pub fn format_float(v: f64) -> String {
    if v == 0.0 || !v.is_finite() || (1e-4..1e15).contains(&v.abs()) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

fn opt_float(v: Option<f64>) -> String {
    v.map(format_float).unwrap_or_default()
}

fn percent(v: f64) -> String {
    format!("{v:.2}")
}

struct Table {
    path: PathBuf,
    writer: csv::Writer<Vec<u8>>,
}

impl Table {
    fn new(dir: &Path, name: &str, header: &[&str]) -> Result<Self> {
        let mut table = Self {
            path: dir.join(name),
            writer: csv::Writer::from_writer(Vec::new()),
        };
        table.row(header.iter().map(|s| s.to_string()))?;
        Ok(table)
    }

    fn row(&mut self, fields: impl IntoIterator<Item = String>) -> Result<()> {
        let path = &self.path;
        self.writer
            .write_record(fields.into_iter().collect::<Vec<_>>())
            .map_err(|source| HarnessError::Csv {
                path: path.clone(),
                source,
            })
    }

    fn finish(self) -> Result<PathBuf> {
        let bytes = self.writer.into_inner().map_err(|e| HarnessError::Write {
            path: self.path.clone(),
            source: e.into_error(),
        })?;
        write_file(&self.path, &bytes)?;
        Ok(self.path)
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|source| HarnessError::Write {
        path: path.to_path_buf(),
        source,
    })
}

/// Write every artifact into `dir` (created if missing); returns the paths written.
pub fn emit_outputs(report: &ExperimentReport, dir: &Path, svg: bool) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|source| HarnessError::Write {
        path: dir.to_path_buf(),
        source,
    })?;
    let wsn = report.config.kind == ExperimentKind::Wsn;
    let mut written = vec![
        stats_csv(report, dir)?,
        raw_csv(report, dir)?,
        curves_csv(report, dir, wsn)?,
    ];
    if wsn {
        written.push(coverage_csv(report, dir)?);
        written.push(deployment_csv(report, dir)?);
    }

    let config_path = dir.join("config.json");
    write_file(&config_path, report.config.to_json().as_bytes())?;
    written.push(config_path);
    let report_path = dir.join("report.json");
    let json = serde_json::to_vec(report).map_err(|source| HarnessError::Json {
        path: report_path.clone(),
        source,
    })?;
    write_file(&report_path, &json)?;
    written.push(report_path);

    if svg {
        written.extend(render_svgs(report, dir)?);
    }
    Ok(written)
}

fn stats_csv(report: &ExperimentReport, dir: &Path) -> Result<PathBuf> {
    let mut t = Table::new(
        dir,
        "stats.csv",
        &[
            "algorithm",
            "objective",
            "best",
            "worst",
            "mean",
            "std",
            "runs",
        ],
    )?;
    for cell in &report.cells {
        let s = &cell.stats;
        t.row([
            cell.algorithm.to_string(),
            cell.objective.clone(),
            format_float(s.best),
            format_float(s.worst),
            format_float(s.mean),
            format_float(s.std),
            s.runs.to_string(),
        ])?;
    }
    t.finish()
}

fn raw_csv(report: &ExperimentReport, dir: &Path) -> Result<PathBuf> {
    let mut t = Table::new(
        dir,
        "raw.csv",
        &[
            "algorithm",
            "objective",
            "trial",
            "seed",
            "fitness",
            "coverage",
            "eta",
            "evaluations",
        ],
    )?;
    for cell in &report.cells {
        for r in &cell.trials {
            t.row([
                cell.algorithm.to_string(),
                cell.objective.clone(),
                r.trial.to_string(),
                r.seed.to_string(),
                format_float(r.fitness),
                opt_float(r.coverage),
                opt_float(r.eta),
                r.evaluations.to_string(),
            ])?;
        }
    }
    t.finish()
}

fn curves_csv(report: &ExperimentReport, dir: &Path, wsn: bool) -> Result<PathBuf> {
    let mut header = vec!["algorithm", "objective", "trial", "iteration", "fitness"];
    if wsn {
        header.push("coverage");
    }
    let mut t = Table::new(dir, "curves.csv", &header)?;
    for cell in &report.cells {
        for r in &cell.trials {
            for (k, &f) in r.curve.iter().enumerate() {
                let mut row = vec![
                    cell.algorithm.to_string(),
                    cell.objective.clone(),
                    r.trial.to_string(),
                    (k + 1).to_string(),
                    format_float(f),
                ];
                if wsn {
                    row.push(format_float(1.0 - f));
                }
                t.row(row)?;
            }
        }
    }
    t.finish()
}

fn coverage_csv(report: &ExperimentReport, dir: &Path) -> Result<PathBuf> {
    let mut t = Table::new(
        dir,
        "coverage.csv",
        &[
            "algorithm",
            "best",
            "worst",
            "mean",
            "std",
            "runs",
            "connected_trials",
            "best_run_eta",
        ],
    )?;
    for cell in &report.cells {
        let (Some(cov), Some(conn)) = (&cell.coverage, &cell.connectivity) else {
            continue;
        };
        t.row([
            cell.algorithm.to_string(),
            percent(cov.best),
            percent(cov.worst),
            percent(cov.mean),
            percent(cov.std),
            cov.runs.to_string(),
            cov.connected_trials.to_string(),
            percent(100.0 * conn.eta),
        ])?;
    }
    t.finish()
}

fn deployment_csv(report: &ExperimentReport, dir: &Path) -> Result<PathBuf> {
    let mut t = Table::new(
        dir,
        "deployment.csv",
        &["algorithm", "trial", "node", "x", "y"],
    )?;
    for cell in &report.cells {
        let Some(d) = &cell.deployment else { continue };
        for (i, p) in d.nodes.iter().enumerate() {
            t.row([
                cell.algorithm.to_string(),
                cell.best().trial.to_string(),
                i.to_string(),
                format_float(p.x),
                format_float(p.y),
            ])?;
        }
    }
    t.finish()
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

fn file_stem(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

fn render_svgs(report: &ExperimentReport, dir: &Path) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    let mut save = |name: String, body: String| -> Result<()> {
        let path = dir.join(name);
        write_file(&path, body.as_bytes())?;
        out.push(path);
        Ok(())
    };
    if let Some(scenario) = &report.config.scenario {
        for cell in &report.cells {
            let stem = file_stem(cell.algorithm.name());
            save(
                format!("deployment_{stem}.svg"),
                deployment_svg(cell, scenario, false),
            )?;
            save(
                format!("connectivity_{stem}.svg"),
                deployment_svg(cell, scenario, true),
            )?;
        }
        let series: Vec<(String, Vec<f64>)> = report
            .cells
            .iter()
            .map(|c| {
                (
                    c.algorithm.to_string(),
                    c.best().curve.iter().map(|f| 100.0 * (1.0 - f)).collect(),
                )
            })
            .collect();
        save(
            "convergence.svg".into(),
            line_chart("Coverage of the best run (%)", &series, false),
        )?;
    } else {
        for id in &report.config.functions {
            let label = id.to_string();
            let series: Vec<(String, Vec<f64>)> = report
                .cells
                .iter()
                .filter(|c| c.objective == label)
                .map(|c| (c.algorithm.to_string(), mean_curve(c)))
                .collect();
            let log = series.iter().all(|(_, s)| s.iter().all(|&v| v > 0.0));
            let title = format!(
                "{label}: mean best-so-far fitness{}",
                if log { " (log10)" } else { "" }
            );
            save(
                format!("convergence_{}.svg", file_stem(&label)),
                line_chart(&title, &series, log),
            )?;
        }
    }
    Ok(out)
}

fn mean_curve(cell: &CellReport) -> Vec<f64> {
    let len = cell.trials.iter().map(|r| r.curve.len()).min().unwrap_or(0);
    (0..len)
        .map(|k| cell.trials.iter().map(|r| r.curve[k]).sum::<f64>() / cell.trials.len() as f64)
        .collect()
}

fn deployment_svg(cell: &CellReport, scenario: &WsnScenario, links: bool) -> String {
    let scale = 10.0;
    let margin = 20.0;
    let (w, h) = (scenario.length * scale, scenario.width * scale);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        w + 2.0 * margin,
        h + 2.0 * margin + 20.0,
        w + 2.0 * margin,
        h + 2.0 * margin + 20.0
    );
    let _ = writeln!(
        s,
        r##"<rect x="{margin}" y="{margin}" width="{w}" height="{h}" fill="white" stroke="#333"/>"##
    );
    let Some(d) = &cell.deployment else {
        s.push_str("</svg>\n");
        return s;
    };
    let px = |x: f64| margin + x * scale;
    let py = |y: f64| margin + h - y * scale;
    if links {
        let labels = cell
            .connectivity
            .as_ref()
            .map(|c| c.labels.clone())
            .unwrap_or_default();
        for i in 0..d.nodes.len() {
            for j in i + 1..d.nodes.len() {
                if distance(d.nodes[i], d.nodes[j]) < scenario.comm_radius {
                    let (a, b) = (d.nodes[i], d.nodes[j]);
                    let _ = writeln!(
                        s,
                        r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#888" stroke-width="1"/>"##,
                        px(a.x),
                        py(a.y),
                        px(b.x),
                        py(b.y)
                    );
                }
            }
        }
        for (i, p) in d.nodes.iter().enumerate() {
            let color = PALETTE[labels.get(i).copied().unwrap_or(0) % PALETTE.len()];
            let _ = writeln!(
                s,
                r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="{color}"/>"#,
                px(p.x),
                py(p.y)
            );
        }
    } else {
        for p in &d.nodes {
            let _ = writeln!(
                s,
                r##"<circle cx="{:.2}" cy="{:.2}" r="{:.2}" fill="#1f77b4" fill-opacity="0.15" stroke="#1f77b4"/>"##,
                px(p.x),
                py(p.y),
                scenario.sensing_radius * scale
            );
            let _ = writeln!(
                s,
                r#"<circle cx="{:.2}" cy="{:.2}" r="2.5" fill="black"/>"#,
                px(p.x),
                py(p.y)
            );
        }
    }
    let caption = match (&cell.coverage, &cell.connectivity, links) {
        (_, Some(c), true) => format!(
            "{}: {} component(s), eta {:.2}%",
            cell.algorithm,
            c.component_sizes.len(),
            100.0 * c.eta
        ),
        _ => format!(
            "{}: coverage {:.2}%",
            cell.algorithm,
            100.0 * (1.0 - cell.best().fitness)
        ),
    };
    let _ = writeln!(
        s,
        r#"<text x="{margin}" y="{:.2}" font-family="sans-serif" font-size="14">{caption}</text>"#,
        h + 2.0 * margin + 10.0
    );
    s.push_str("</svg>\n");
    s
}

fn line_chart(title: &str, series: &[(String, Vec<f64>)], log: bool) -> String {
    let (w, h, left, top) = (640.0, 400.0, 70.0, 40.0);
    let transform = |v: f64| if log { v.log10() } else { v };
    let values = series
        .iter()
        .flat_map(|(_, s)| s.iter().map(|&v| transform(v)));
    let (mut lo, mut hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        if v.is_finite() {
            (lo.min(v), hi.max(v))
        } else {
            (lo, hi)
        }
    });
    if !lo.is_finite() {
        (lo, hi) = (0.0, 1.0);
    }
    if hi - lo < 1e-12 {
        (lo, hi) = (lo - 0.5, hi + 0.5);
    }
    let len = series
        .iter()
        .map(|(_, s)| s.len())
        .max()
        .unwrap_or(1)
        .max(2);
    let x = |k: usize| left + w * k as f64 / (len - 1) as f64;
    let y = |v: f64| top + h * (hi - v) / (hi - lo);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}">"#,
        w + left + 160.0,
        h + top + 50.0
    );
    let _ = writeln!(
        s,
        r#"<text x="{left}" y="24" font-family="sans-serif" font-size="15">{title}</text>"#
    );
    let _ = writeln!(
        s,
        r##"<rect x="{left}" y="{top}" width="{w}" height="{h}" fill="none" stroke="#333"/>"##
    );
    for (label, v) in [(hi, top), (lo, top + h)] {
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="11" text-anchor="end">{}</text>"#,
            left - 6.0,
            v + 4.0,
            format_axis(label)
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="12" text-anchor="middle">iteration (1..{len})</text>"#,
        left + w / 2.0,
        top + h + 30.0
    );
    for (i, (name, data)) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let points: Vec<String> = data
            .iter()
            .enumerate()
            .filter(|(_, v)| transform(**v).is_finite())
            .map(|(k, &v)| format!("{:.2},{:.2}", x(k), y(transform(v))))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
            points.join(" ")
        );
        let ly = top + 16.0 * (i as f64 + 1.0);
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{ly:.1}" font-family="sans-serif" font-size="12" fill="{color}">{name}</text>"#,
            left + w + 12.0
        );
    }
    s.push_str("</svg>\n");
    s
}

fn format_axis(v: f64) -> String {
    if v.abs() >= 1e4 || (v != 0.0 && v.abs() < 1e-2) {
        format!("{v:.2e}")
    } else {
        format!("{v:.2}")
    }
}
