//! Comparison optimizers: artificial bee colony, firefly algorithm and plain
//! random search. They share the run contract of [`crate::ngo::run`].

use alloc::format;
use alloc::vec::Vec;

use crate::chaos::uniform_init;
use crate::error::{Error, Result};
use crate::population::{checked_eval, evaluate_population, Counting, Objective};
use crate::result::{BestSoFar, RunResult};
use crate::rng::{RandomSource, RngStream};
use crate::space::SearchSpace;

/// Firefly parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FireflyParams {
    /// Randomization scale, relative to the box width.
    pub alpha: f64,
    /// Multiplier applied to `alpha` after every iteration.
    pub alpha_decay: f64,
    /// Attractiveness at distance zero.
    pub beta0: f64,
    /// Light absorption coefficient.
    pub gamma: f64,
}

impl Default for FireflyParams {
    fn default() -> Self {
        Self {
            alpha: 0.2,
            alpha_decay: 0.97,
            beta0: 1.0,
            gamma: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BaselineConfig {
    pub n: usize,
    pub t_max: usize,
    pub seed: u64,
    /// Trials without improvement before a bee colony source is abandoned.
    /// `None` resolves to `n * dim / 2`.
    pub abc_limit: Option<usize>,
    pub firefly: FireflyParams,
}

impl BaselineConfig {
    pub fn new(n: usize, t_max: usize, seed: u64) -> Self {
        Self {
            n,
            t_max,
            seed,
            abc_limit: None,
            firefly: FireflyParams::default(),
        }
    }

    pub fn abc_limit_for(&self, dim: usize) -> usize {
        self.abc_limit.unwrap_or((self.n * dim / 2).max(1))
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.t_max == 0 {
            return Err(Error::Configuration(
                "population size and iteration budget must be positive".into(),
            ));
        }
        if self.abc_limit == Some(0) {
            return Err(Error::Configuration(
                "bee colony limit must be positive".into(),
            ));
        }
        let fa = &self.firefly;
        let valid = fa.alpha > 0.0 && fa.alpha_decay > 0.0 && fa.beta0 > 0.0 && fa.gamma >= 0.0;
        if !valid {
            return Err(Error::Configuration(format!(
                "firefly parameters must be positive with gamma >= 0 (got {fa:?})"
            )));
        }
        Ok(())
    }
}

/// Bee colony fitness: `1 / (1 + f)` for `f >= 0`, else `1 + |f|`.
fn nectar(f: f64) -> f64 {
    if f >= 0.0 {
        1.0 / (1.0 + f)
    } else {
        1.0 + libm::fabs(f)
    }
}

/// Neighbor search on food source `i` along one random dimension, greedy.
fn forage<O: Objective + ?Sized>(
    i: usize,
    space: &SearchSpace,
    sources: &mut [Vec<f64>],
    cost: &mut [f64],
    trials: &mut [usize],
    rng: &mut RngStream,
    objective: &mut O,
) -> Result<()> {
    let mut k = rng.below(sources.len() - 1);
    if k >= i {
        k += 1;
    }
    let j = rng.below(space.dim());
    let phi = 2.0 * rng.uniform() - 1.0;
    let mut candidate = sources[i].clone();
    candidate[j] += phi * (sources[i][j] - sources[k][j]);
    space.clamp_in_place(&mut candidate);
    let f = checked_eval(objective, &candidate, i)?;
    if f < cost[i] {
        sources[i] = candidate;
        cost[i] = f;
        trials[i] = 0;
    } else {
        trials[i] += 1;
    }
    Ok(())
}

/// Artificial bee colony (Karaboga): employed, onlooker and scout phases over
/// `n` food sources, greedy acceptance, one scout per iteration.
pub fn abc_run<O: Objective + ?Sized>(
    config: &BaselineConfig,
    objective: &mut O,
    space: &SearchSpace,
) -> Result<RunResult> {
    config.validate()?;
    if config.n < 2 {
        return Err(Error::Configuration(
            "bee colony needs at least two sources".into(),
        ));
    }
    let mut objective = Counting::new(objective);
    let mut rng = RngStream::new(config.seed);
    let dim = space.dim();
    let limit = config.abc_limit_for(dim);
    let n = config.n;

    let mut pop = uniform_init(space, n, &mut rng)?;
    evaluate_population(&mut objective, &mut pop)?;
    let mut sources: Vec<Vec<f64>> = pop.agents().iter().map(|a| a.position.clone()).collect();
    let mut cost = pop.fitnesses();
    let mut trials = alloc::vec![0usize; n];
    let first = pop.best();
    let mut best = BestSoFar::new(&first.position, first.fitness);
    let mut curve = Vec::with_capacity(config.t_max);

    for _ in 0..config.t_max {
        for i in 0..n {
            forage(
                i,
                space,
                &mut sources,
                &mut cost,
                &mut trials,
                &mut rng,
                &mut objective,
            )?;
        }

        let fits: Vec<f64> = cost.iter().map(|&f| nectar(f)).collect();
        let max_fit = fits.iter().copied().fold(0.0, f64::max);
        let prob: Vec<f64> = fits.iter().map(|&f| 0.9 * f / max_fit + 0.1).collect();
        let (mut i, mut sent) = (0, 0);
        while sent < n {
            if rng.uniform() < prob[i] {
                sent += 1;
                forage(
                    i,
                    space,
                    &mut sources,
                    &mut cost,
                    &mut trials,
                    &mut rng,
                    &mut objective,
                )?;
            }
            i = (i + 1) % n;
        }

        for i in 0..n {
            best.offer(&sources[i], cost[i]);
        }

        let (worst, &most) = trials
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
            .expect("n >= 2");
        if most > limit {
            sources[worst] = space.sample(&mut rng);
            cost[worst] = checked_eval(&mut objective, &sources[worst], worst)?;
            trials[worst] = 0;
            best.offer(&sources[worst], cost[worst]);
        }
        curve.push(best.fitness);
    }
    let evaluations = objective.calls();
    Ok(best.into_result(curve, evaluations))
}

/// `beta0 exp(-gamma r^2)`; coincident fireflies get the full `beta0`.
pub fn attractiveness(beta0: f64, gamma: f64, dist_sq: f64) -> f64 {
    if dist_sq == 0.0 {
        beta0
    } else {
        beta0 * libm::exp(-gamma * dist_sq)
    }
}

/// One firefly coordinate moved toward a brighter one.
///
/// `noise` is a uniform draw; the random term is `alpha (noise - 0.5) width`.
#[inline]
pub fn firefly_step(x: f64, brighter: f64, beta: f64, alpha: f64, width: f64, noise: f64) -> f64 {
    x + beta * (brighter - x) + alpha * (noise - 0.5) * width
}

/// Firefly algorithm (Yang): every firefly moves toward each brighter one
/// (brightness taken from the start of the iteration), plus a decaying
/// random walk. Moves are not greedy; the best position is tracked separately.
pub fn fa_run<O: Objective + ?Sized>(
    config: &BaselineConfig,
    objective: &mut O,
    space: &SearchSpace,
) -> Result<RunResult> {
    config.validate()?;
    let params = config.firefly;
    let mut objective = Counting::new(objective);
    let mut rng = RngStream::new(config.seed);
    let widths: Vec<f64> = space
        .lower()
        .iter()
        .zip(space.upper())
        .map(|(lo, hi)| hi - lo)
        .collect();

    let mut pop = uniform_init(space, config.n, &mut rng)?;
    evaluate_population(&mut objective, &mut pop)?;
    let mut swarm: Vec<Vec<f64>> = pop.agents().iter().map(|a| a.position.clone()).collect();
    let mut light = pop.fitnesses();
    let first = pop.best();
    let mut best = BestSoFar::new(&first.position, first.fitness);
    let mut curve = Vec::with_capacity(config.t_max);
    let mut alpha = params.alpha;

    for _ in 0..config.t_max {
        let snapshot = swarm.clone();
        for i in 0..swarm.len() {
            for j in 0..snapshot.len() {
                if light[j] >= light[i] {
                    continue;
                }
                let dist_sq: f64 = swarm[i]
                    .iter()
                    .zip(&snapshot[j])
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum();
                let beta = attractiveness(params.beta0, params.gamma, dist_sq);
                for (d, x) in swarm[i].iter_mut().enumerate() {
                    *x = firefly_step(*x, snapshot[j][d], beta, alpha, widths[d], rng.uniform());
                }
                space.clamp_in_place(&mut swarm[i]);
            }
        }
        for (i, x) in swarm.iter().enumerate() {
            light[i] = checked_eval(&mut objective, x, i)?;
            best.offer(x, light[i]);
        }
        alpha *= params.alpha_decay;
        curve.push(best.fitness);
    }
    let evaluations = objective.calls();
    Ok(best.into_result(curve, evaluations))
}

/// `n` uniform samples per iteration; the best one seen wins.
pub fn random_search_run<O: Objective + ?Sized>(
    config: &BaselineConfig,
    objective: &mut O,
    space: &SearchSpace,
) -> Result<RunResult> {
    config.validate()?;
    let mut objective = Counting::new(objective);
    let mut rng = RngStream::new(config.seed);
    let mut best: Option<BestSoFar> = None;
    let mut curve = Vec::with_capacity(config.t_max);
    for _ in 0..config.t_max {
        for i in 0..config.n {
            let x = space.sample(&mut rng);
            let f = checked_eval(&mut objective, &x, i)?;
            match best.as_mut() {
                Some(b) => {
                    b.offer(&x, f);
                }
                None => best = Some(BestSoFar::new(&x, f)),
            }
        }
        curve.push(best.as_ref().map_or(f64::INFINITY, |b| b.fitness));
    }
    let evaluations = objective.calls();
    Ok(best
        .expect("at least one sample")
        .into_result(curve, evaluations))
}
