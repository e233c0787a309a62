use alloc::vec::Vec;

/// Outcome of one optimizer run.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RunResult {
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    /// Best-so-far fitness after each iteration; non-increasing, and the
    /// last entry equals `best_fitness`.
    pub curve: Vec<f64>,
    /// Number of objective calls.
    pub evaluations: u64,
}

/// Tracks the best position seen during a run, independent of the population.
#[derive(Debug, Clone)]
pub(crate) struct BestSoFar {
    pub position: Vec<f64>,
    pub fitness: f64,
}

impl BestSoFar {
    pub fn new(position: &[f64], fitness: f64) -> Self {
        Self {
            position: position.to_vec(),
            fitness,
        }
    }

    /// Replace when strictly better; returns whether it did.
    pub fn offer(&mut self, position: &[f64], fitness: f64) -> bool {
        if fitness < self.fitness {
            self.position.clear();
            self.position.extend_from_slice(position);
            self.fitness = fitness;
            true
        } else {
            false
        }
    }

    pub fn into_result(self, curve: Vec<f64>, evaluations: u64) -> RunResult {
        RunResult {
            best_position: self.position,
            best_fitness: self.fitness,
            curve,
            evaluations,
        }
    }
}
