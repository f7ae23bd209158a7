use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{AlphaMode, ReinforcementMode, SolverConfig};
use super::construct::construct_clique;
use super::pheromone::PheromoneState;
use super::reinforcement::{delta_binary, delta_quality_gap, pso_delta_update, RunState};
use super::schedule::{alpha_schedule, rho_schedule};
use crate::error::ConfigError;
use crate::graph::{Clique, Graph};

/// Random stream for ant `ant` in iteration `t`. Stream 0 is reserved for
/// the swarm update, so every (iteration, ant) pair draws from its own
/// ChaCha stream of the run seed regardless of scheduling.
pub fn ant_rng(seed: u64, t: usize, ant: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((t as u64) << 32) | (ant as u64 + 1));
    rng
}

fn swarm_rng(seed: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(0);
    rng
}

/// One line of the per-iteration log.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IterationLog {
    pub t: usize,
    pub alpha: f64,
    pub rho: f64,
    pub iter_best_size: usize,
    pub global_best_size: usize,
    pub delta_tau: f64,
    pub velocity: f64,
}

/// Outcome of one solver run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunRecord {
    pub best: Clique,
    pub log: Vec<IterationLog>,
    #[serde(with = "duration_secs")]
    pub wall_time: Duration,
    pub config: SolverConfig,
    pub seed: u64,
}

mod duration_secs {
    use std::time::Duration;

    pub fn serialize<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }
}

impl RunRecord {
    pub fn best_size_per_iteration(&self) -> Vec<usize> {
        self.log.iter().map(|l| l.global_best_size).collect()
    }

    pub fn delta_tau_trace(&self) -> Vec<f64> {
        self.log.iter().map(|l| l.delta_tau).collect()
    }

    /// Line-delimited JSON, one object per iteration. Contains no timing,
    /// so equal runs give byte-identical logs.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for line in &self.log {
            writeln!(
                out,
                "{}",
                serde_json::to_string(line).expect("log serializes")
            )
            .unwrap();
        }
        out
    }

    /// Parse a log written by [`RunRecord::to_jsonl`].
    pub fn parse_jsonl(text: &str) -> serde_json::Result<Vec<IterationLog>> {
        text.lines()
            .filter(|l| !l.trim().is_empty())
            .map(serde_json::from_str)
            .collect()
    }

    /// Every field except wall time and the `parallel` switch, as canonical
    /// JSON. Two runs of the same graph, settings and seed always agree.
    pub fn deterministic_fingerprint(&self) -> String {
        let mut copy = self.clone();
        copy.wall_time = Duration::ZERO;
        copy.config.parallel = false;
        serde_json::to_string(&copy).expect("record serializes")
    }
}

/// What an observer sees after each iteration's update.
pub struct IterationView<'a> {
    pub t: usize,
    pub ant_cliques: &'a [Clique],
    pub state: &'a RunState,
    pub pheromone: &'a PheromoneState,
}

/// Run the colony with `cfg` on `g`.
pub fn run(g: &Graph, cfg: &SolverConfig) -> Result<RunRecord, ConfigError> {
    run_with(g, cfg, |_| {})
}

/// [`run`], calling `observe` after every iteration.
pub fn run_with<F>(g: &Graph, cfg: &SolverConfig, mut observe: F) -> Result<RunRecord, ConfigError>
where
    F: FnMut(&IterationView<'_>),
{
    cfg.validate()?;
    if g.is_empty() {
        return Err(ConfigError::Invalid("graph has no vertices".into()));
    }
    let start = Instant::now();
    let mut ph = PheromoneState::new(g, cfg.tau_min, cfg.tau_max, cfg.tau_max);
    let mut state = RunState::new(cfg);
    let mut swarm = swarm_rng(cfg.seed);
    let mut rho = cfg.rho0;
    let mut log = Vec::with_capacity(cfg.iterations);

    for t in 1..=cfg.iterations {
        state.t = t;
        let alpha = match cfg.alpha_schedule {
            AlphaMode::Scheduled => f64::from(alpha_schedule(t)),
            AlphaMode::Fixed => cfg.alpha,
        };
        let build = |k: usize| construct_clique(g, &ph, alpha, &mut ant_rng(cfg.seed, t, k));
        let cliques: Vec<Clique> = if cfg.parallel {
            (0..cfg.ants).into_par_iter().map(build).collect()
        } else {
            (0..cfg.ants).map(build).collect()
        };

        // first ant wins ties
        let iter_best =
            cliques.iter().fold(
                &cliques[0],
                |best, c| if c.size() > best.size() { c } else { best },
            );
        state.iter_best = iter_best.clone();
        if state.iter_best.size() > state.global_best.size() {
            state.global_best = state.iter_best.clone();
        }

        ph.evaporate(rho, cfg.evaporation);
        match cfg.reinforcement_mode {
            ReinforcementMode::Binary => state.delta_tau = delta_binary(true),
            ReinforcementMode::QualityGap => {
                state.delta_tau =
                    delta_quality_gap(state.global_best.size(), state.iter_best.size())
            }
            ReinforcementMode::Pso => pso_delta_update(&mut state, cfg, &mut swarm),
        }
        ph.reinforce(&state.iter_best, state.delta_tau);
        debug_assert!(ph.check_invariants().is_ok());

        log.push(IterationLog {
            t,
            alpha,
            rho,
            iter_best_size: state.iter_best.size(),
            global_best_size: state.global_best.size(),
            delta_tau: state.delta_tau,
            velocity: state.velocity,
        });
        observe(&IterationView {
            t,
            ant_cliques: &cliques,
            state: &state,
            pheromone: &ph,
        });
        rho = rho_schedule(rho, cfg.phi);
    }

    Ok(RunRecord {
        best: state.global_best,
        log,
        wall_time: start.elapsed(),
        config: cfg.clone(),
        seed: cfg.seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_maximal;

    #[test]
    fn complete_graph_every_mode() {
        let g = Graph::complete(6);
        for mode in ReinforcementMode::ALL {
            let cfg = SolverConfig {
                iterations: 50,
                ..Default::default()
            }
            .with_mode(mode);
            let rec = run(&g, &cfg).unwrap();
            assert_eq!(rec.best.size(), 6, "{mode}");
            assert_eq!(rec.log.len(), 50);
        }
    }

    #[test]
    fn rejects_invalid_input() {
        let g = Graph::complete(3);
        assert!(run(
            &g,
            &SolverConfig {
                ants: 0,
                ..Default::default()
            }
        )
        .is_err());
        assert!(run(&Graph::empty(0), &SolverConfig::default()).is_err());
    }

    #[test]
    fn observer_sees_every_iteration() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        let cfg = SolverConfig {
            iterations: 30,
            ants: 5,
            ..Default::default()
        };
        let mut seen = 0;
        run_with(&g, &cfg, |view| {
            seen += 1;
            assert_eq!(view.ant_cliques.len(), 5);
            assert!(view.ant_cliques.iter().all(|c| is_maximal(&g, c)));
            view.pheromone.check_invariants().unwrap();
            assert!(view.state.delta_tau >= 0.0);
        })
        .unwrap();
        assert_eq!(seen, 30);
    }

    #[test]
    fn rho_follows_schedule_in_log() {
        let g = Graph::complete(3);
        let cfg = SolverConfig {
            iterations: 3,
            ..Default::default()
        };
        let rec = run(&g, &cfg).unwrap();
        assert_eq!(rec.log[0].rho, 0.95);
        assert_eq!(rec.log[1].rho, rho_schedule(0.95, 0.0002));
        assert_eq!(
            rec.log[2].rho,
            rho_schedule(rho_schedule(0.95, 0.0002), 0.0002)
        );
    }

    #[test]
    fn jsonl_round_trip() {
        let g = Graph::complete(4);
        let rec = run(
            &g,
            &SolverConfig {
                iterations: 5,
                ..Default::default()
            },
        )
        .unwrap();
        let text = rec.to_jsonl();
        assert_eq!(text.lines().count(), 5);
        assert_eq!(RunRecord::parse_jsonl(&text).unwrap(), rec.log);
    }
}
