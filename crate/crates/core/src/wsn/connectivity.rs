use alloc::vec;
use alloc::vec::Vec;

use super::{distance, Deployment};

/// Connected components of the communication graph.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConnectivityReport {
    /// Component sizes, largest first.
    pub component_sizes: Vec<usize>,
    pub largest: usize,
    /// `largest / N`.
    pub eta: f64,
    /// Component label of every node (labels are the smallest member index).
    pub labels: Vec<usize>,
}

impl ConnectivityReport {
    pub fn is_connected(&self) -> bool {
        self.component_sizes.len() == 1
    }
}

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Root is always the smaller index.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Link nodes closer than `comm_radius` (strict) and measure the largest
/// component as a share of all nodes. An empty deployment reports `eta = 0`.
pub fn connectivity_rate(deployment: &Deployment, comm_radius: f64) -> ConnectivityReport {
    let nodes = &deployment.nodes;
    let n = nodes.len();
    let mut sets = DisjointSet::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if distance(nodes[i], nodes[j]) < comm_radius {
                sets.union(i, j);
            }
        }
    }
    let labels: Vec<usize> = (0..n).map(|i| sets.find(i)).collect();
    let mut counts = vec![0usize; n];
    for &l in &labels {
        counts[l] += 1;
    }
    let mut component_sizes: Vec<usize> = counts.into_iter().filter(|&c| c > 0).collect();
    component_sizes.sort_unstable_by(|a, b| b.cmp(a));
    let largest = component_sizes.first().copied().unwrap_or(0);
    let eta = if n == 0 {
        0.0
    } else {
        largest as f64 / n as f64
    };
    ConnectivityReport {
        component_sizes,
        largest,
        eta,
        labels,
    }
}
