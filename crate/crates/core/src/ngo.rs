//! Northern goshawk optimization and its improved variant.
//!
//! Every iteration runs the two classic NGO phases for each agent (prey
//! identification / strike, then chase / escape), each with greedy
//! acceptance. With [`StrategyFlags::use_bped`] a second stage follows: the
//! population is ranked, the best fifth is pushed around the global best with
//! an oscillating weight and a chaotic step switch (greedy), and the worst
//! fifth is forcibly relocated either next to the global best or by a large
//! mutation (unconditional). [`StrategyFlags::use_dcmis`] swaps the uniform
//! initial population for the chaotic one from [`crate::chaos::dcmis_init`].
//!
//! Candidates that leave the search box are clamped back onto it.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::chaos::{chaotic_disturbance, dcmis_init, uniform_init};
use crate::error::{Error, Result};
use crate::population::{
    checked_eval, evaluate_population, rank_and_partition, Counting, Objective, Population,
};
use crate::result::{BestSoFar, RunResult};
use crate::rng::{RandomSource, RngStream};
use crate::space::SearchSpace;

/// The two ablation switches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StrategyFlags {
    /// Chaotic population initialization.
    pub use_dcmis: bool,
    /// Elite / weak population stage after the NGO phases.
    pub use_bped: bool,
}

impl StrategyFlags {
    pub const NGO: Self = Self::new(false, false);
    pub const INGO_DCMIS: Self = Self::new(true, false);
    pub const INGO_BPED: Self = Self::new(false, true);
    pub const INGO: Self = Self::new(true, true);

    /// The four variants of the ablation study, baseline first.
    pub const ABLATION: [Self; 4] = [Self::NGO, Self::INGO_DCMIS, Self::INGO_BPED, Self::INGO];

    pub const fn new(use_dcmis: bool, use_bped: bool) -> Self {
        Self {
            use_dcmis,
            use_bped,
        }
    }

    pub fn name(self) -> &'static str {
        match (self.use_dcmis, self.use_bped) {
            (false, false) => "NGO",
            (true, false) => "INGO-DCMIS",
            (false, true) => "INGO-BPED",
            (true, true) => "INGO",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OptimizerConfig {
    /// Population size, at least 5.
    pub n: usize,
    /// Iteration budget.
    pub t_max: usize,
    pub elite_frac: f64,
    pub weak_frac: f64,
    pub seed: u64,
    pub flags: StrategyFlags,
}

impl OptimizerConfig {
    pub const DEFAULT_ELITE_FRAC: f64 = 0.2;
    pub const DEFAULT_WEAK_FRAC: f64 = 0.2;

    pub fn new(n: usize, t_max: usize, seed: u64, flags: StrategyFlags) -> Self {
        Self {
            n,
            t_max,
            elite_frac: Self::DEFAULT_ELITE_FRAC,
            weak_frac: Self::DEFAULT_WEAK_FRAC,
            seed,
            flags,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 5 {
            return Err(Error::Configuration(format!(
                "population size must be at least 5, got {}",
                self.n
            )));
        }
        if self.t_max == 0 {
            return Err(Error::Configuration(
                "iteration budget must be at least 1".into(),
            ));
        }
        if !(self.elite_frac > 0.0
            && self.weak_frac > 0.0
            && self.elite_frac + self.weak_frac <= 1.0)
        {
            return Err(Error::Configuration(format!(
                "elite/weak fractions must be positive and sum to at most 1 (got {}, {})",
                self.elite_frac, self.weak_frac
            )));
        }
        Ok(())
    }
}

/// Neighborhood radius of the chase phase: `0.02 (1 - t / t_max)`.
pub fn exploitation_radius(t: usize, t_max: usize) -> f64 {
    0.02 * (1.0 - t as f64 / t_max as f64)
}

/// Oscillating elite weight `0.5 (sin(2 pi t / dim + pi) pi t / t_max + 1)`.
///
/// Near 0.5 early on; the swing grows linearly with `t` up to
/// `0.5 (1 +- pi)`.
pub fn bped_weight(t: usize, t_max: usize, dim: usize) -> f64 {
    let freq = 1.0 / dim as f64;
    let t = t as f64;
    0.5 * (libm::sin(2.0 * PI * freq * t + PI) * PI * (t / t_max as f64) + 1.0)
}

/// Strike step for one coordinate. `intensity` is 1 or 2.
#[inline]
pub fn prey_strike_candidate(
    x: f64,
    prey: f64,
    prey_is_better: bool,
    r: f64,
    intensity: f64,
) -> f64 {
    if prey_is_better {
        x + r * (prey - intensity * x)
    } else {
        x + r * (x - prey)
    }
}

/// Chase step for one coordinate: `x + radius (2r - 1) x`.
#[inline]
pub fn chase_candidate(x: f64, radius: f64, r: f64) -> f64 {
    x + radius * (2.0 * r - 1.0) * x
}

/// Elite move for one coordinate: `x_q + w (best - factor x_k)`.
#[inline]
pub fn elite_candidate(x_q: f64, best: f64, x_k: f64, weight: f64, factor: f64) -> f64 {
    x_q + weight * (best - factor * x_k)
}

/// The chaotic step switch, `round(1 + |z|)`; 1 or 2 for any disturbance.
#[inline]
pub fn step_switch(z: f64) -> f64 {
    libm::round(1.0 + libm::fabs(z))
}

/// Narrowing step interval `[lb_ap, ub_ap]` of the weak-agent local search.
///
/// `ub_ap` starts at a hundredth of the box width and shrinks linearly to zero at
/// `t_max`; `lb_ap` is one percent of it.
pub fn dynamic_bounds(lower: f64, upper: f64, t: usize, t_max: usize) -> (f64, f64) {
    let ub_ap = (upper - lower) * (1.0 - t as f64 / t_max as f64) * 0.01;
    (ub_ap / 100.0, ub_ap)
}

/// Weak agent, local case: `best + sign (lb_ap + step (ub_ap - lb_ap))`.
#[inline]
pub fn refinement_candidate(best: f64, sign: f64, lb_ap: f64, ub_ap: f64, step: f64) -> f64 {
    best + sign * (lb_ap + step * (ub_ap - lb_ap))
}

/// Weak agent, mutation case: `x - 2 sign (lb + step (ub - lb))`.
#[inline]
pub fn mutation_candidate(x: f64, sign: f64, lower: f64, upper: f64, step: f64) -> f64 {
    x - 2.0 * sign * (lower + step * (upper - lower))
}

#[inline]
fn sign(v: f64) -> f64 {
    if v > 0.0 {
        1.0
    } else if v < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Uniform index in `0..n` other than `skip`.
fn other_index<R: RandomSource + ?Sized>(rng: &mut R, n: usize, skip: usize) -> usize {
    let k = rng.below(n - 1);
    if k >= skip {
        k + 1
    } else {
        k
    }
}

/// Exploration phase for agent `i`; returns whether the candidate was accepted.
///
/// Draws the prey index and one intensity `I` in {1, 2} for the agent, then a
/// fresh `r` per dimension.
pub fn prey_strike_phase<O, R>(
    pop: &mut Population,
    i: usize,
    objective: &mut O,
    space: &SearchSpace,
    rng: &mut R,
) -> Result<bool>
where
    O: Objective + ?Sized,
    R: RandomSource + ?Sized,
{
    pop.require_evaluated()?;
    if pop.len() < 2 {
        return Err(Error::Configuration(
            "prey selection needs at least two agents".into(),
        ));
    }
    let k = other_index(rng, pop.len(), i);
    let current = pop.agent(i);
    let prey = pop.agent(k);
    let prey_is_better = prey.fitness < current.fitness;
    let intensity = 1.0 + rng.below(2) as f64;
    let mut candidate: Vec<f64> = current
        .position
        .iter()
        .zip(&prey.position)
        .map(|(&x, &p)| prey_strike_candidate(x, p, prey_is_better, rng.uniform(), intensity))
        .collect();
    space.clamp_in_place(&mut candidate);
    accept_if_better(pop, i, candidate, objective)
}

/// Exploitation phase for agent `i` at iteration `t`.
pub fn chase_escape_phase<O, R>(
    pop: &mut Population,
    i: usize,
    objective: &mut O,
    space: &SearchSpace,
    rng: &mut R,
    t: usize,
    t_max: usize,
) -> Result<bool>
where
    O: Objective + ?Sized,
    R: RandomSource + ?Sized,
{
    pop.require_evaluated()?;
    let radius = exploitation_radius(t, t_max);
    let mut candidate: Vec<f64> = pop
        .agent(i)
        .position
        .iter()
        .map(|&x| chase_candidate(x, radius, rng.uniform()))
        .collect();
    space.clamp_in_place(&mut candidate);
    accept_if_better(pop, i, candidate, objective)
}

fn accept_if_better<O: Objective + ?Sized>(
    pop: &mut Population,
    i: usize,
    candidate: Vec<f64>,
    objective: &mut O,
) -> Result<bool> {
    let fitness = checked_eval(objective, &candidate, i)?;
    if fitness < pop.agent(i).fitness {
        pop.commit(i, candidate, fitness);
        Ok(true)
    } else {
        Ok(false)
    }
}

/// Move each elite agent relative to the global best and another elite.
///
/// The partner is drawn among the other elites (any other agent when the elite
/// set is a singleton). Greedy acceptance.
#[allow(clippy::too_many_arguments)]
pub fn bped_elite_update<O, R>(
    pop: &mut Population,
    elite: &[usize],
    best: &[f64],
    objective: &mut O,
    space: &SearchSpace,
    rng: &mut R,
    t: usize,
    t_max: usize,
) -> Result<()>
where
    O: Objective + ?Sized,
    R: RandomSource + ?Sized,
{
    pop.require_evaluated()?;
    space.check_dim(best)?;
    if elite.is_empty() {
        return Err(Error::Configuration("elite set is empty".into()));
    }
    let weight = bped_weight(t, t_max, space.dim());
    for (slot, &q) in elite.iter().enumerate() {
        let k = if elite.len() > 1 {
            elite[other_index(rng, elite.len(), slot)]
        } else {
            other_index(rng, pop.len(), q)
        };
        let factor = step_switch(chaotic_disturbance(rng));
        let x_q = &pop.agent(q).position;
        let x_k = &pop.agent(k).position;
        let mut candidate: Vec<f64> = (0..space.dim())
            .map(|j| elite_candidate(x_q[j], best[j], x_k[j], weight, factor))
            .collect();
        space.clamp_in_place(&mut candidate);
        accept_if_better(pop, q, candidate, objective)?;
    }
    Ok(())
}

/// Relocate each weak agent; the result always replaces it.
///
/// A uniform draw picks the case: below 0.5 a narrowing local search around
/// `best`, otherwise a large mutation of the agent's own position.
#[allow(clippy::too_many_arguments)]
pub fn bped_weak_update<O, R>(
    pop: &mut Population,
    weak: &[usize],
    best: &[f64],
    objective: &mut O,
    space: &SearchSpace,
    rng: &mut R,
    t: usize,
    t_max: usize,
) -> Result<()>
where
    O: Objective + ?Sized,
    R: RandomSource + ?Sized,
{
    pop.require_evaluated()?;
    space.check_dim(best)?;
    if weak.is_empty() {
        return Err(Error::Configuration("weak set is empty".into()));
    }
    let (lower, upper) = (space.lower(), space.upper());
    for &z1 in weak {
        let local = rng.uniform() < 0.5;
        let x = &pop.agent(z1).position;
        let mut candidate: Vec<f64> = (0..space.dim())
            .map(|j| {
                let dir = sign(rng.uniform() - 0.5);
                let step = rng.uniform();
                if local {
                    let (lb_ap, ub_ap) = dynamic_bounds(lower[j], upper[j], t, t_max);
                    refinement_candidate(best[j], dir, lb_ap, ub_ap, step)
                } else {
                    mutation_candidate(x[j], dir, lower[j], upper[j], step)
                }
            })
            .collect();
        space.clamp_in_place(&mut candidate);
        let fitness = checked_eval(objective, &candidate, z1)?;
        pop.commit(z1, candidate, fitness);
    }
    Ok(())
}

/// Both NGO phases for every agent, in agent order.
pub fn ngo_sweep<O, R>(
    pop: &mut Population,
    objective: &mut O,
    space: &SearchSpace,
    rng: &mut R,
    t: usize,
    t_max: usize,
) -> Result<()>
where
    O: Objective + ?Sized,
    R: RandomSource + ?Sized,
{
    for i in 0..pop.len() {
        prey_strike_phase(pop, i, objective, space, rng)?;
        chase_escape_phase(pop, i, objective, space, rng, t, t_max)?;
    }
    Ok(())
}

/// Initial population for `config`, drawn from `rng`.
pub fn initialize<R: RandomSource + ?Sized>(
    config: &OptimizerConfig,
    space: &SearchSpace,
    rng: &mut R,
) -> Result<Population> {
    if config.flags.use_dcmis {
        dcmis_init(space, config.n, rng)
    } else {
        uniform_init(space, config.n, rng)
    }
}

/// Run the optimizer from a fresh stream seeded with `config.seed`.
pub fn run<O: Objective + ?Sized>(
    config: &OptimizerConfig,
    objective: &mut O,
    space: &SearchSpace,
) -> Result<RunResult> {
    config.validate()?;
    let mut rng = RngStream::new(config.seed);
    let pop = initialize(config, space, &mut rng)?;
    run_from(config, objective, space, pop, &mut rng)
}

/// Run the iteration loop on a given (possibly unevaluated) initial population.
///
/// `config.flags.use_dcmis` and `config.seed` are ignored here; the caller
/// owns initialization and the stream.
pub fn run_from<O, R>(
    config: &OptimizerConfig,
    objective: &mut O,
    space: &SearchSpace,
    mut pop: Population,
    rng: &mut R,
) -> Result<RunResult>
where
    O: Objective + ?Sized,
    R: RandomSource + ?Sized,
{
    config.validate()?;
    if pop.len() < 5 {
        return Err(Error::Configuration(format!(
            "population size must be at least 5, got {}",
            pop.len()
        )));
    }
    if !pop.within(space) {
        return Err(Error::InvalidArgument(
            "initial population must lie inside the search space".into(),
        ));
    }
    let mut objective = Counting::new(objective);
    evaluate_population(&mut objective, &mut pop)?;
    let first = pop.best();
    let mut best = BestSoFar::new(&first.position, first.fitness);
    let mut curve = Vec::with_capacity(config.t_max);

    for t in 1..=config.t_max {
        ngo_sweep(&mut pop, &mut objective, space, rng, t, config.t_max)?;
        best.offer(&pop.best().position, pop.best().fitness);

        if config.flags.use_bped {
            let part = rank_and_partition(&pop, config.elite_frac, config.weak_frac)?;
            bped_elite_update(
                &mut pop,
                &part.elite,
                &best.position,
                &mut objective,
                space,
                rng,
                t,
                config.t_max,
            )?;
            best.offer(&pop.best().position, pop.best().fitness);
            bped_weak_update(
                &mut pop,
                &part.weak,
                &best.position,
                &mut objective,
                space,
                rng,
                t,
                config.t_max,
            )?;
            best.offer(&pop.best().position, pop.best().fitness);
        }
        curve.push(best.fitness);
    }
    let evaluations = objective.calls();
    Ok(best.into_result(curve, evaluations))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chaos::tests::Scripted;
    use alloc::vec;

    fn line(lo: f64, hi: f64) -> SearchSpace {
        SearchSpace::uniform(1, lo, hi).unwrap()
    }

    fn evaluated(points: &[f64], f: &mut impl FnMut(&[f64]) -> f64) -> Population {
        let mut pop =
            Population::from_positions(points.iter().map(|p| vec![*p]).collect()).unwrap();
        evaluate_population(f, &mut pop).unwrap();
        pop
    }

    #[test]
    fn scalar_formulas() {
        assert_eq!(prey_strike_candidate(1.0, 2.0, true, 0.5, 1.0), 1.5);
        assert_eq!(prey_strike_candidate(1.0, 2.0, false, 0.5, 1.0), 0.5);
        assert!((chase_candidate(10.0, exploitation_radius(0, 500), 1.0) - 10.2).abs() < 1e-12);
        assert_eq!(chase_candidate(10.0, 0.02, 0.5), 10.0);
        assert_eq!(
            chase_candidate(10.0, exploitation_radius(500, 500), 0.9),
            10.0
        );
        assert_eq!(elite_candidate(1.0, 2.0, 0.0, 0.5, 1.0), 2.0);
        assert_eq!(elite_candidate(3.0, 3.0, 3.0, 1.7, 1.0), 3.0);
        assert_eq!(refinement_candidate(5.0, 1.0, 0.0, 1.0, 0.5), 5.5);
        assert_eq!(mutation_candidate(0.0, 1.0, -10.0, 10.0, 0.5), 0.0);
        assert_eq!(mutation_candidate(0.0, 1.0, -10.0, 10.0, 0.75), -10.0);
    }

    #[test]
    fn radius_schedule() {
        assert_eq!(exploitation_radius(0, 500), 0.02);
        assert_eq!(exploitation_radius(250, 500), 0.01);
        assert_eq!(exploitation_radius(500, 500), 0.0);
    }

    fn weight_oracle(t: usize, t_max: usize, dim: usize) -> f64 {
        use std::f64::consts::PI;
        let t = t as f64;
        0.5 * ((2.0 * PI * t / dim as f64 + PI).sin() * PI * (t / t_max as f64) + 1.0)
    }

    #[test]
    fn weight_values() {
        assert_eq!(bped_weight(0, 500, 30), 0.5);
        // frozen from a 30-digit evaluation
        assert!((bped_weight(500, 500, 30) - 1.860_349_523_175_663_4).abs() < 1e-12);
        assert!((bped_weight(250, 500, 30) - (-0.180_174_761_587_831_7)).abs() < 1e-12);
        for t in 0..=500 {
            let w = bped_weight(t, 500, 30);
            assert!((w - weight_oracle(t, 500, 30)).abs() < 1e-12);
            assert!((0.5 * (1.0 - PI) - 1e-12..=0.5 * (1.0 + PI) + 1e-12).contains(&w));
        }
    }

    #[test]
    fn dynamic_bounds_narrow() {
        assert_eq!(dynamic_bounds(-50.0, 50.0, 0, 100), (0.01, 1.0));
        let (lb, ub) = dynamic_bounds(-50.0, 50.0, 50, 100);
        assert!((ub - 0.5).abs() < 1e-12 && (lb - 0.005).abs() < 1e-12);
        assert_eq!(dynamic_bounds(-50.0, 50.0, 100, 100), (0.0, 0.0));
    }

    #[test]
    fn step_switch_is_one_or_two() {
        let mut rng = RngStream::new(5);
        for _ in 0..100_000 {
            let f = step_switch(chaotic_disturbance(&mut rng));
            assert!(f == 1.0 || f == 2.0);
        }
        assert_eq!(step_switch(crate::chaos::MAP_MIN), 2.0);
        assert_eq!(step_switch(0.0), 1.0);
    }

    #[test]
    fn strike_upper_branch_accepts() {
        let mut f = |x: &[f64]| (x[0] - 2.0) * (x[0] - 2.0);
        let mut pop = evaluated(&[1.0, 2.0], &mut f);
        // prey draw 0 -> agent 1, I draw 0 -> I = 1, r = 0.5
        let mut rng = Scripted::new(&[0.0, 0.0, 0.5]);
        let accepted =
            prey_strike_phase(&mut pop, 0, &mut f, &line(-10.0, 10.0), &mut rng).unwrap();
        assert!(accepted);
        assert_eq!(pop.agent(0).position, vec![1.5]);
        assert_eq!(pop.agent(0).fitness, 0.25);
    }

    #[test]
    fn strike_lower_branch_and_rejection() {
        let mut f = |x: &[f64]| x[0] * x[0];
        let mut pop = evaluated(&[1.0, 2.0], &mut f);
        let mut rng = Scripted::new(&[0.0, 0.9, 0.5]);
        assert!(prey_strike_phase(&mut pop, 0, &mut f, &line(-10.0, 10.0), &mut rng).unwrap());
        assert_eq!(pop.agent(0).position, vec![0.5]);

        let mut g = |x: &[f64]| (x[0] - 1.0) * (x[0] - 1.0);
        let mut pop = evaluated(&[1.0, 2.0], &mut g);
        let before = pop.clone();
        let mut rng = Scripted::new(&[0.0, 0.9, 0.5]);
        assert!(!prey_strike_phase(&mut pop, 0, &mut g, &line(-10.0, 10.0), &mut rng).unwrap());
        assert_eq!(pop, before);
    }

    #[test]
    fn phases_require_evaluation() {
        let mut f = |x: &[f64]| x[0];
        let mut pop = Population::from_positions(vec![vec![1.0], vec![2.0]]).unwrap();
        let mut rng = Scripted::new(&[0.3]);
        assert_eq!(
            prey_strike_phase(&mut pop, 0, &mut f, &line(0.0, 5.0), &mut rng),
            Err(Error::Unevaluated)
        );
        assert_eq!(
            chase_escape_phase(&mut pop, 0, &mut f, &line(0.0, 5.0), &mut rng, 1, 10),
            Err(Error::Unevaluated)
        );
    }

    #[test]
    fn chase_examples() {
        let mut f = |x: &[f64]| -x[0];
        let mut pop = evaluated(&[10.0, 3.0], &mut f);
        let mut rng = Scripted::new(&[1.0]);
        assert!(
            chase_escape_phase(&mut pop, 0, &mut f, &line(0.0, 20.0), &mut rng, 0, 500).unwrap()
        );
        assert!((pop.agent(0).position[0] - 10.2).abs() < 1e-12);

        let mut pop = evaluated(&[10.0, 3.0], &mut f);
        let mut rng = Scripted::new(&[0.5]);
        assert!(
            !chase_escape_phase(&mut pop, 0, &mut f, &line(0.0, 20.0), &mut rng, 0, 500).unwrap()
        );
        assert_eq!(pop.agent(0).position, vec![10.0]);

        // past the upper bound gets clamped
        let mut pop = evaluated(&[10.0, 3.0], &mut f);
        let mut rng = Scripted::new(&[1.0]);
        chase_escape_phase(&mut pop, 0, &mut f, &line(0.0, 10.1), &mut rng, 0, 500).unwrap();
        assert_eq!(pop.agent(0).position, vec![10.1]);
    }

    #[test]
    fn elite_update_singleton_uses_other_agent() {
        // elite {0}; partner draw 0.99 -> among {1..4} picks agent 4
        let mut f = |x: &[f64]| x[0] * x[0];
        let mut pop = evaluated(&[1.0, 2.0, 3.0, 4.0, 0.0], &mut f);
        let space = line(-10.0, 10.0);
        // below(4) from 0.99 -> 3 -> index 4 (position 0); z seed 0 -> factor 1
        let mut rng = Scripted::new(&[0.99, 0.0]);
        let w = bped_weight(0, 10, 1);
        bped_elite_update(&mut pop, &[0], &[0.0], &mut f, &space, &mut rng, 0, 10).unwrap();
        // candidate 1 + 0.5 (0 - 0) = 1, not better -> unchanged
        assert_eq!(w, 0.5);
        assert_eq!(pop.agent(0).position, vec![1.0]);

        // partner agent 1 (position 2): 1 + 0.5 (0 - 2) = 0 -> accepted
        let mut rng = Scripted::new(&[0.0, 0.0]);
        bped_elite_update(&mut pop, &[0], &[0.0], &mut f, &space, &mut rng, 0, 10).unwrap();
        assert_eq!(pop.agent(0).position, vec![0.0]);
        assert_eq!(pop.best_index(), 0);
    }

    #[test]
    fn weak_update_cases() {
        let mut f = |x: &[f64]| x[0] * x[0];
        let space = line(-10.0, 10.0);
        // case 1: u = 0.2, sign draw 0.9 -> +1, step 0.5; t = 0 so ub_ap = 0.2, lb_ap = 0.002
        let mut pop = evaluated(&[0.0, 1.0, 2.0, 3.0, 9.0], &mut f);
        let mut rng = Scripted::new(&[0.2, 0.9, 0.5]);
        bped_weak_update(&mut pop, &[4], &[5.0], &mut f, &space, &mut rng, 0, 10).unwrap();
        assert!((pop.agent(4).position[0] - (5.0 + 0.002 + 0.5 * 0.198)).abs() < 1e-12);
        // sign draw 0.1 -> -1
        let mut rng = Scripted::new(&[0.2, 0.1, 0.5]);
        bped_weak_update(&mut pop, &[4], &[5.0], &mut f, &space, &mut rng, 0, 10).unwrap();
        assert!((pop.agent(4).position[0] - (5.0 - 0.101)).abs() < 1e-12);

        // case 2: u = 0.7, sign +1, step 0.75 -> 9 - 2 * 5 = -1; worse or not, it replaces
        let mut pop = evaluated(&[0.0, 1.0, 2.0, 3.0, 9.0], &mut f);
        let mut rng = Scripted::new(&[0.7, 0.9, 0.75]);
        bped_weak_update(&mut pop, &[4], &[0.0], &mut f, &space, &mut rng, 0, 10).unwrap();
        assert_eq!(pop.agent(4).position, vec![-1.0]);
        assert_eq!(pop.agent(4).fitness, 1.0);

        // unconditional: a worse candidate still replaces the agent
        let mut pop = evaluated(&[0.0, 1.0, 2.0, 3.0, 0.5], &mut f);
        let mut rng = Scripted::new(&[0.7, 0.9, 0.25]);
        bped_weak_update(&mut pop, &[4], &[0.0], &mut f, &space, &mut rng, 0, 10).unwrap();
        // 0.5 - 2 * (-5) = 10.5 -> clamped to 10
        assert_eq!(pop.agent(4).position, vec![10.0]);
        assert_eq!(pop.agent(4).fitness, 100.0);
    }

    #[test]
    fn sweep_never_worsens_any_agent() {
        let space = SearchSpace::uniform(5, -5.0, 5.0).unwrap();
        let mut f = |x: &[f64]| {
            x.iter()
                .map(|v| v * v - 10.0 * libm::cos(2.0 * PI * v))
                .sum::<f64>()
        };
        let mut rng = RngStream::new(17);
        let mut pop = uniform_init(&space, 20, &mut rng).unwrap();
        evaluate_population(&mut f, &mut pop).unwrap();
        for t in 1..=30 {
            let before = pop.fitnesses();
            ngo_sweep(&mut pop, &mut f, &space, &mut rng, t, 30).unwrap();
            for (b, a) in before.iter().zip(pop.fitnesses()) {
                assert!(a <= *b);
            }
            assert!(pop.within(&space));
        }
    }

    #[test]
    fn config_validation() {
        assert!(OptimizerConfig::new(4, 10, 0, StrategyFlags::NGO)
            .validate()
            .is_err());
        assert!(OptimizerConfig::new(5, 0, 0, StrategyFlags::NGO)
            .validate()
            .is_err());
        let mut c = OptimizerConfig::new(30, 10, 0, StrategyFlags::INGO);
        c.elite_frac = 0.9;
        assert!(c.validate().is_err());
        assert!(OptimizerConfig::new(5, 1, 0, StrategyFlags::INGO)
            .validate()
            .is_ok());
    }

    #[test]
    fn flag_names() {
        let names: Vec<_> = StrategyFlags::ABLATION.iter().map(|f| f.name()).collect();
        assert_eq!(names, ["NGO", "INGO-DCMIS", "INGO-BPED", "INGO"]);
    }
}
