use alloc::vec;
use alloc::vec::Vec;

use super::{distance, Deployment, Point, WsnScenario};
use crate::error::{Error, Result};
use crate::population::Objective;

/// Boolean sensing model: 1 when `target` is within `radius` (inclusive).
pub fn sensing_indicator(node: Point, target: Point, radius: f64) -> u8 {
    u8::from(distance(node, target) <= radius)
}

/// Joint detection `1 - prod(1 - p_i)` over all nodes.
pub fn joint_detection(nodes: &[Point], target: Point, radius: f64) -> u8 {
    let miss: u32 = nodes
        .iter()
        .map(|n| 1 - u32::from(sensing_indicator(*n, target, radius)))
        .product();
    (1 - miss) as u8
}

/// Cell-center monitoring points of a scenario plus a reusable coverage mask.
#[derive(Debug, Clone)]
pub struct CoverageGrid {
    step: f64,
    columns: usize,
    rows: usize,
    points: Vec<Point>,
    covered: Vec<bool>,
}

/// Whole cells along a side; the tolerance keeps e.g. 0.6 / 0.2 at 3.
fn cells(extent: f64, step: f64) -> usize {
    libm::floor(extent / step + 1e-9) as usize
}

impl CoverageGrid {
    /// Points at `(k + 1/2) step` for `k = 0 .. floor(extent / step) - 1`
    /// along each axis. A partial strip at the far edge is left out.
    pub fn new(scenario: &WsnScenario) -> Result<Self> {
        let step = scenario.grid_step;
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::Configuration("grid step must be positive".into()));
        }
        let columns = cells(scenario.length, step);
        let rows = cells(scenario.width, step);
        if columns == 0 || rows == 0 {
            return Err(Error::Configuration(alloc::format!(
                "grid step {step} leaves no monitoring points in a {} x {} area",
                scenario.length,
                scenario.width
            )));
        }
        let mut points = Vec::with_capacity(columns * rows);
        for r in 0..rows {
            for c in 0..columns {
                points.push(Point::new(center(c, step), center(r, step)));
            }
        }
        Ok(Self {
            step,
            columns,
            rows,
            covered: vec![false; points.len()],
            points,
        })
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Row-major monitoring points.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Mask from the last [`CoverageGrid::evaluate`] call, aligned with `points`.
    pub fn covered(&self) -> &[bool] {
        &self.covered
    }

    /// Index range of centers within `[lo, hi]` along one axis, padded by a
    /// cell on both sides; the exact distance test decides membership.
    fn window(&self, lo: f64, hi: f64, count: usize) -> (usize, usize) {
        let first = libm::floor((lo - 0.5 * self.step) / self.step) - 1.0;
        let last = libm::ceil((hi - 0.5 * self.step) / self.step) + 1.0;
        let first = if first > 0.0 { first as usize } else { 0 };
        let last = if last < 0.0 {
            0
        } else {
            (last as usize).min(count - 1)
        };
        (first, last)
    }

    /// Mark the points covered by `nodes`; returns the number covered.
    pub fn evaluate(&mut self, nodes: impl IntoIterator<Item = Point>, radius: f64) -> usize {
        self.covered.iter_mut().for_each(|c| *c = false);
        let mut count = 0;
        for node in nodes {
            let (c0, c1) = self.window(node.x - radius, node.x + radius, self.columns);
            let (r0, r1) = self.window(node.y - radius, node.y + radius, self.rows);
            if c0 > c1 || r0 > r1 {
                continue;
            }
            for r in r0..=r1 {
                let base = r * self.columns;
                for idx in base + c0..=base + c1 {
                    if !self.covered[idx] && distance(node, self.points[idx]) <= radius {
                        self.covered[idx] = true;
                        count += 1;
                    }
                }
            }
        }
        count
    }
}

#[inline]
fn center(k: usize, step: f64) -> f64 {
    (k as f64 + 0.5) * step
}

/// Fraction of monitoring points jointly detected by the deployment.
pub fn coverage_rate(deployment: &Deployment, scenario: &WsnScenario) -> Result<f64> {
    let mut grid = CoverageGrid::new(scenario)?;
    let covered = grid.evaluate(deployment.nodes.iter().copied(), scenario.sensing_radius);
    Ok(covered as f64 / grid.points().len() as f64)
}

/// `1 - coverage_rate` of the decoded position vector; 0 is full coverage.
#[derive(Debug, Clone)]
pub struct CoverageObjective {
    scenario: WsnScenario,
    grid: CoverageGrid,
}

impl CoverageObjective {
    pub fn scenario(&self) -> &WsnScenario {
        &self.scenario
    }

    pub fn grid(&self) -> &CoverageGrid {
        &self.grid
    }
}

pub fn coverage_objective(scenario: &WsnScenario) -> Result<CoverageObjective> {
    scenario.validate()?;
    Ok(CoverageObjective {
        scenario: scenario.clone(),
        grid: CoverageGrid::new(scenario)?,
    })
}

impl Objective for CoverageObjective {
    /// Panics if `x.len() != 2 * nodes`.
    fn evaluate(&mut self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), 2 * self.scenario.nodes, "deployment vector length");
        let nodes = x.chunks_exact(2).map(|c| Point::new(c[0], c[1]));
        let covered = self.grid.evaluate(nodes, self.scenario.sensing_radius);
        1.0 - covered as f64 / self.grid.points.len() as f64
    }
}
