use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::space::SearchSpace;

/// Function to minimize.
///
/// `evaluate` takes `&mut self` so objectives may own state such as a noise
/// stream; any `FnMut(&[f64]) -> f64` closure qualifies.
pub trait Objective {
    fn evaluate(&mut self, x: &[f64]) -> f64;
}

impl<F: FnMut(&[f64]) -> f64> Objective for F {
    fn evaluate(&mut self, x: &[f64]) -> f64 {
        self(x)
    }
}

/// Borrows an objective and counts calls.
#[derive(Debug)]
pub struct Counting<'a, O: ?Sized> {
    inner: &'a mut O,
    calls: u64,
}

impl<'a, O: Objective + ?Sized> Counting<'a, O> {
    pub fn new(inner: &'a mut O) -> Self {
        Self { inner, calls: 0 }
    }

    pub fn calls(&self) -> u64 {
        self.calls
    }
}

impl<O: Objective + ?Sized> Objective for Counting<'_, O> {
    fn evaluate(&mut self, x: &[f64]) -> f64 {
        self.calls += 1;
        self.inner.evaluate(x)
    }
}

/// Evaluate and reject NaN / infinite values.
pub(crate) fn checked_eval<O: Objective + ?Sized>(
    objective: &mut O,
    x: &[f64],
    agent: usize,
) -> Result<f64> {
    let value = objective.evaluate(x);
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFiniteFitness { agent, value })
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Agent {
    pub position: Vec<f64>,
    /// Meaningful only once the owning population is evaluated.
    pub fitness: f64,
}

/// Ordered set of agents with cached fitness values.
#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    agents: Vec<Agent>,
    best_index: usize,
    evaluated: bool,
}

impl Population {
    /// Unevaluated population from raw positions.
    pub fn from_positions(positions: Vec<Vec<f64>>) -> Result<Self> {
        if positions.is_empty() {
            return Err(Error::EmptyInput);
        }
        let dim = positions[0].len();
        if let Some(bad) = positions.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.len(),
            });
        }
        let agents = positions
            .into_iter()
            .map(|position| Agent {
                position,
                fitness: f64::INFINITY,
            })
            .collect();
        Ok(Self {
            agents,
            best_index: 0,
            evaluated: false,
        })
    }

    pub fn len(&self) -> usize {
        self.agents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.agents.is_empty()
    }

    pub fn agents(&self) -> &[Agent] {
        &self.agents
    }

    pub fn agent(&self, i: usize) -> &Agent {
        &self.agents[i]
    }

    pub fn is_evaluated(&self) -> bool {
        self.evaluated
    }

    pub fn best_index(&self) -> usize {
        self.best_index
    }

    pub fn best(&self) -> &Agent {
        &self.agents[self.best_index]
    }

    pub fn fitnesses(&self) -> Vec<f64> {
        self.agents.iter().map(|a| a.fitness).collect()
    }

    pub(crate) fn require_evaluated(&self) -> Result<()> {
        if self.evaluated {
            Ok(())
        } else {
            Err(Error::Unevaluated)
        }
    }

    /// Overwrite agent `i` with an already evaluated position and keep
    /// `best_index` current.
    pub(crate) fn commit(&mut self, i: usize, position: Vec<f64>, fitness: f64) {
        let best = self.agents[self.best_index].fitness;
        self.agents[i] = Agent { position, fitness };
        if i == self.best_index {
            if fitness > best {
                self.refresh_best();
            }
        } else if fitness < best || (fitness == best && i < self.best_index) {
            self.best_index = i;
        }
    }

    /// Recompute `best_index`; ties go to the lowest index.
    pub(crate) fn refresh_best(&mut self) {
        let mut best = 0;
        for (i, a) in self.agents.iter().enumerate().skip(1) {
            if a.fitness < self.agents[best].fitness {
                best = i;
            }
        }
        self.best_index = best;
    }

    /// Check every position against `space`.
    pub fn within(&self, space: &SearchSpace) -> bool {
        self.agents.iter().all(|a| space.contains(&a.position))
    }
}

/// Evaluate every agent, in order, and locate the best one.
///
/// Returns the number of objective calls made.
pub fn evaluate_population<O: Objective + ?Sized>(
    objective: &mut O,
    pop: &mut Population,
) -> Result<u64> {
    for (i, agent) in pop.agents.iter_mut().enumerate() {
        agent.fitness = checked_eval(objective, &agent.position, i)?;
    }
    pop.evaluated = true;
    pop.refresh_best();
    Ok(pop.agents.len() as u64)
}

/// Fitness ranking split into best (`elite`), worst (`weak`) and the rest.
///
/// Each list is in rank order, best first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub elite: Vec<usize>,
    pub middle: Vec<usize>,
    pub weak: Vec<usize>,
}

/// `floor(frac * n + 0.5)`
fn round_half_up(frac: f64, n: usize) -> usize {
    libm::floor(frac * n as f64 + 0.5) as usize
}

/// Rank agents by fitness (ties: lower index first) and cut off the
/// `round(elite_frac * N)` best and `round(weak_frac * N)` worst.
pub fn rank_and_partition(pop: &Population, elite_frac: f64, weak_frac: f64) -> Result<Partition> {
    pop.require_evaluated()?;
    if !(elite_frac > 0.0 && weak_frac > 0.0 && elite_frac + weak_frac <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "partition fractions must be positive and sum to at most 1 (got {elite_frac}, {weak_frac})"
        )));
    }
    let n = pop.len();
    let n_elite = round_half_up(elite_frac, n);
    let n_weak = round_half_up(weak_frac, n);
    if n_elite == 0 || n_weak == 0 {
        return Err(Error::Configuration(format!(
            "population of {n} is too small to partition with fractions {elite_frac}/{weak_frac}"
        )));
    }
    if n_elite + n_weak > n {
        return Err(Error::Configuration(format!(
            "elite ({n_elite}) and weak ({n_weak}) sets overlap in a population of {n}"
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    // stable sort keeps the lower index first on ties
    order.sort_by(|&a, &b| pop.agents[a].fitness.total_cmp(&pop.agents[b].fitness));
    let weak = order.split_off(n - n_weak);
    let middle = order.split_off(n_elite);
    Ok(Partition {
        elite: order,
        middle,
        weak,
    })
}
