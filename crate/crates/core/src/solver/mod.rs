//! Ant colony search for large cliques.
//!
//! Ants grow maximal cliques vertex by vertex, choosing extensions in
//! proportion to the trail on edges into the partial clique. After each
//! iteration the trails evaporate and the iteration-best clique is
//! reinforced. The reinforcement amount comes from one of three rules
//! ([`ReinforcementMode`]); the `Pso` rule treats Δτ as a one-dimensional
//! particle pulled toward the quality of the iteration-best and global-best
//! cliques.

mod config;
mod construct;
mod pheromone;
mod reinforcement;
mod run;
mod schedule;

pub use config::{AlphaMode, Evaporation, ReinforcementMode, SolverConfig};
pub use construct::{construct_clique, select_vertex};
pub use pheromone::PheromoneState;
pub use reinforcement::{
    delta_binary, delta_quality_gap, pso_delta_update, pso_velocity, pso_velocity_with,
    PsoCoefficients, RunState,
};
pub use run::{ant_rng, run, run_with, IterationLog, IterationView, RunRecord};
pub use schedule::{alpha_schedule, rho_schedule, RHO_CAP};
