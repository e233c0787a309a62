//! Wireless sensor network deployment model.
//!
//! The monitored `length x width` rectangle is discretized into square cells of
//! side `grid_step`; one monitoring point sits at each cell center. A point is
//! covered when some node lies within the sensing radius (boundary included).
//! A deployment of `N` nodes is encoded as a `2N` vector
//! `[x_0, y_0, x_1, y_1, ...]`.

mod connectivity;
mod coverage;

pub use connectivity::{connectivity_rate, ConnectivityReport};
pub use coverage::{
    coverage_objective, coverage_rate, joint_detection, sensing_indicator, CoverageGrid,
    CoverageObjective,
};

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::space::SearchSpace;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }
}

/// Euclidean distance.
#[inline]
pub fn distance(a: Point, b: Point) -> f64 {
    let dx = a.x - b.x;
    let dy = a.y - b.y;
    libm::sqrt(dx * dx + dy * dy)
}

/// Monitoring area, node count, radii and grid resolution (all in meters).
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WsnScenario {
    pub length: f64,
    pub width: f64,
    pub nodes: usize,
    pub sensing_radius: f64,
    pub comm_radius: f64,
    pub grid_step: f64,
}

impl Default for WsnScenario {
    /// 50 m x 50 m, 35 nodes, R = 5 m, Rc = 10 m, 0.8 m grid.
    fn default() -> Self {
        Self {
            length: 50.0,
            width: 50.0,
            nodes: 35,
            sensing_radius: 5.0,
            comm_radius: 10.0,
            grid_step: 0.8,
        }
    }
}

impl WsnScenario {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("length", self.length),
            ("width", self.width),
            ("sensing_radius", self.sensing_radius),
            ("comm_radius", self.comm_radius),
            ("grid_step", self.grid_step),
        ];
        for (name, v) in positive {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Configuration(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        if self.nodes == 0 {
            return Err(Error::Configuration("at least one node is required".into()));
        }
        if self.comm_radius < 2.0 * self.sensing_radius {
            return Err(Error::Configuration(format!(
                "communication radius must satisfy Rc >= 2R (Rc = {}, R = {})",
                self.comm_radius, self.sensing_radius
            )));
        }
        if self.grid_step > self.length.min(self.width) {
            return Err(Error::Configuration(format!(
                "grid step {} leaves no monitoring points in a {} x {} area",
                self.grid_step, self.length, self.width
            )));
        }
        Ok(())
    }

    /// `[0, L] x [0, M]` repeated per node, interleaved x/y.
    pub fn search_space(&self) -> Result<SearchSpace> {
        let (lower, upper): (Vec<f64>, Vec<f64>) = (0..2 * self.nodes)
            .map(|k| (0.0, if k % 2 == 0 { self.length } else { self.width }))
            .unzip();
        SearchSpace::new(lower, upper)
    }

    pub fn contains(&self, p: Point) -> bool {
        (0.0..=self.length).contains(&p.x) && (0.0..=self.width).contains(&p.y)
    }
}

/// Node coordinates.
#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Deployment {
    pub nodes: Vec<Point>,
}

impl Deployment {
    pub fn new(nodes: Vec<Point>) -> Self {
        Self { nodes }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn within(&self, scenario: &WsnScenario) -> bool {
        self.nodes.iter().all(|p| scenario.contains(*p))
    }

    /// Inverse of [`decode_deployment`].
    pub fn encode(&self) -> Vec<f64> {
        self.nodes.iter().flat_map(|p| [p.x, p.y]).collect()
    }
}

/// Node `i` is `(x[2i], x[2i + 1])`.
pub fn decode_deployment(x: &[f64], scenario: &WsnScenario) -> Result<Deployment> {
    if x.len() != 2 * scenario.nodes {
        return Err(Error::DimensionMismatch {
            expected: 2 * scenario.nodes,
            found: x.len(),
        });
    }
    Ok(Deployment::new(
        x.chunks_exact(2).map(|c| Point::new(c[0], c[1])).collect(),
    ))
}
