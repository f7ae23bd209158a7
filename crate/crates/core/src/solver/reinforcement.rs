//! Reinforcement rules: how much trail Δτ is deposited on the iteration-best
//! clique.

use rand::distr::{Distribution, Open01};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::config::SolverConfig;
use crate::graph::Clique;

/// 1 for edges of the good solution, 0 otherwise.
pub fn delta_binary(is_good: bool) -> f64 {
    if is_good {
        1.0
    } else {
        0.0
    }
}

/// `1 / (1 + |global_best_size - iter_best_size|)`: full deposit when the
/// iteration matches the best so far, shrinking with the size gap.
pub fn delta_quality_gap(global_best_size: usize, iter_best_size: usize) -> f64 {
    1.0 / (1.0 + global_best_size.abs_diff(iter_best_size) as f64)
}

/// Learning coefficients of the velocity update.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PsoCoefficients {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl From<&SolverConfig> for PsoCoefficients {
    fn from(cfg: &SolverConfig) -> Self {
        Self {
            c1: cfg.c1,
            c2: cfg.c2,
            c3: cfg.c3,
        }
    }
}

/// Velocity update with explicit random factors:
/// `c1·r1·(p_tau − Δτ) + c2·r2·(g_tau − Δτ) + c3·v`.
pub fn pso_velocity_with(
    v: f64,
    delta_tau: f64,
    p_tau: f64,
    g_tau: f64,
    k: PsoCoefficients,
    r1: f64,
    r2: f64,
) -> f64 {
    k.c1 * r1 * (p_tau - delta_tau) + k.c2 * r2 * (g_tau - delta_tau) + k.c3 * v
}

/// Velocity update with r1, r2 drawn uniformly from the open interval (0, 1).
pub fn pso_velocity<R: Rng + ?Sized>(
    v: f64,
    delta_tau: f64,
    p_tau: f64,
    g_tau: f64,
    k: PsoCoefficients,
    rng: &mut R,
) -> f64 {
    let r1: f64 = Open01.sample(rng);
    let r2: f64 = Open01.sample(rng);
    pso_velocity_with(v, delta_tau, p_tau, g_tau, k, r1, r2)
}

/// Per-run search state.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunState {
    /// Current iteration, 1-based; 0 before the first iteration.
    pub t: usize,
    pub global_best: Clique,
    pub iter_best: Clique,
    /// Current reinforcement amount, never negative.
    pub delta_tau: f64,
    pub velocity: f64,
}

impl RunState {
    pub fn new(cfg: &SolverConfig) -> Self {
        Self {
            t: 0,
            global_best: Clique::empty(),
            iter_best: Clique::empty(),
            delta_tau: cfg.delta_tau_initial,
            velocity: cfg.v_initial,
        }
    }

    /// Attractor for the iteration best: the quality-gap value of its size.
    pub fn p_tau(&self) -> f64 {
        delta_quality_gap(self.global_best.size(), self.iter_best.size())
    }

    /// Attractor for the global best; always 1.
    pub fn g_tau(&self) -> f64 {
        delta_quality_gap(self.global_best.size(), self.global_best.size())
    }

    /// Advance (Δτ, V) one step toward the given attractors with fixed
    /// random factors. Δτ is clamped at zero.
    pub fn pso_step(&mut self, p_tau: f64, g_tau: f64, k: PsoCoefficients, r1: f64, r2: f64) {
        self.velocity = pso_velocity_with(self.velocity, self.delta_tau, p_tau, g_tau, k, r1, r2);
        self.delta_tau = (self.delta_tau + self.velocity).max(0.0);
    }
}

/// One swarm update of the reinforcement amount using the current
/// iteration-best and global-best cliques as attractors.
pub fn pso_delta_update<R: Rng + ?Sized>(state: &mut RunState, cfg: &SolverConfig, rng: &mut R) {
    let r1: f64 = Open01.sample(rng);
    let r2: f64 = Open01.sample(rng);
    let (p, g) = (state.p_tau(), state.g_tau());
    state.pso_step(p, g, PsoCoefficients::from(cfg), r1, r2);
}
