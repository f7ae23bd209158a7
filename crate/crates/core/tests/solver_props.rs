mod common;

use clique_swarm::solver::{
    self, alpha_schedule, ant_rng, construct_clique, rho_schedule, select_vertex, AlphaMode,
    Evaporation, PheromoneState, ReinforcementMode, SolverConfig,
};
use clique_swarm::{datasets, is_clique, is_maximal, Clique, Graph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn modes() -> impl Strategy<Value = ReinforcementMode> {
    prop::sample::select(ReinforcementMode::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn constructed_cliques_are_maximal(
        g in common::graphs(1, 20),
        levels in prop::collection::vec(0.01f64..6.0, 190),
        alpha in 0.5f64..4.0,
        seed in any::<u64>(),
    ) {
        let mut ph = PheromoneState::new(&g, 0.01, 6.0, 6.0);
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            ph.set(u, v, levels[i % levels.len()]);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..10 {
            let c = construct_clique(&g, &ph, alpha, &mut rng);
            prop_assert!(!c.is_empty());
            prop_assert!(is_clique(&g, c.members()).unwrap());
            prop_assert!(common::common_neighbors(&g, c.members()).is_empty());
        }
    }

    #[test]
    fn trails_stay_in_bounds(
        g in common::graphs(2, 15),
        steps in prop::collection::vec((0.0f64..=1.0, 0.0f64..10.0, any::<bool>(), any::<u16>()), 1..40),
    ) {
        let mut ph = PheromoneState::new(&g, 0.01, 6.0, 6.0);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for (rho, delta, literal, _) in steps {
            let mode = if literal { Evaporation::Literal } else { Evaporation::Persistence };
            ph.evaporate(rho, mode);
            let c = construct_clique(&g, &ph, 1.0, &mut rng);
            ph.reinforce(&c, delta);
            prop_assert_eq!(ph.check_invariants(), Ok(()));
            prop_assert!(ph.only_on_edges());
            prop_assert!(ph.iter().all(|(_, _, t)| (0.01..=6.0).contains(&t)));
        }
    }

    #[test]
    fn runs_respect_the_optimum(g in common::graphs(1, 14), mode in modes(), seed in any::<u64>()) {
        let cfg = SolverConfig { iterations: 40, ants: 8, seed, ..Default::default() }.with_mode(mode);
        let rec = solver::run(&g, &cfg).unwrap();
        prop_assert!(rec.best.size() <= common::omega(&g));
        prop_assert!(is_maximal(&g, &rec.best));
        let trace = rec.best_size_per_iteration();
        prop_assert!(trace.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(*trace.last().unwrap(), rec.best.size());
        prop_assert!(rec.log.iter().all(|l| l.delta_tau >= 0.0 && l.iter_best_size <= l.global_best_size));
        prop_assert!(rec.log.windows(2).all(|w| w[1].rho <= w[0].rho && w[0].rho <= 0.95));
    }

    #[test]
    fn same_seed_same_record(g in common::graphs(1, 16), mode in modes(), seed in any::<u64>()) {
        let cfg = SolverConfig { iterations: 25, ants: 6, seed, ..Default::default() }.with_mode(mode);
        let a = solver::run(&g, &cfg).unwrap();
        let b = solver::run(&g, &SolverConfig { parallel: true, ..cfg.clone() }).unwrap();
        prop_assert_eq!(&a.best, &b.best);
        prop_assert_eq!(&a.log, &b.log);
    }

    #[test]
    fn schedules_are_monotone(t in 1usize..5000, rho in 0.0f64..1.0, phi in 0.0f64..1.0) {
        prop_assert!(alpha_schedule(t) <= alpha_schedule(t + 1));
        prop_assert!((1..=4).contains(&alpha_schedule(t)));
        let next = rho_schedule(rho, phi);
        prop_assert!(next <= 0.95 && next <= rho);
    }

    #[test]
    fn config_toml_round_trip(
        ants in 1usize..100, iterations in 1usize..5000, rho0 in 0.01f64..0.95, phi in 0.0f64..0.5,
        mode in modes(), fixed in any::<bool>(), seed in any::<u64>(),
    ) {
        let cfg = SolverConfig {
            ants, iterations, rho0, phi, seed,
            reinforcement_mode: mode,
            alpha_schedule: if fixed { AlphaMode::Fixed } else { AlphaMode::Scheduled },
            ..Default::default()
        };
        let back = SolverConfig::from_toml_str(&cfg.to_toml_string()).unwrap();
        prop_assert_eq!(back, cfg);
    }
}

#[test]
fn uniform_start_is_uniform() {
    // empty clique: every candidate equally likely, whatever the trails
    let g = Graph::complete(5);
    let mut ph = PheromoneState::new(&g, 0.01, 6.0, 6.0);
    ph.set(0, 1, 0.01);
    let candidates: Vec<usize> = (0..5).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let draws = 100_000;
    let mut counts = [0usize; 5];
    for _ in 0..draws {
        counts[select_vertex(&candidates, &Clique::empty(), &ph, 3.0, &mut rng)] += 1;
    }
    // chi-square, 4 degrees of freedom; 18.47 is the 0.999 quantile
    let e = draws as f64 / 5.0;
    let chi2: f64 = counts.iter().map(|&c| (c as f64 - e).powi(2) / e).sum();
    assert!(chi2 < 18.47, "chi2 = {chi2}, counts {counts:?}");
}

#[test]
fn selection_follows_alpha() {
    // scores 4 and 1 at alpha 2 -> odds 16:1
    let g = Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
    let mut ph = PheromoneState::new(&g, 0.01, 6.0, 1.0);
    ph.set(0, 1, 4.0);
    let c = Clique::new(&g, [0]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let draws = 100_000;
    let hits = (0..draws)
        .filter(|_| select_vertex(&[1, 2], &c, &ph, 2.0, &mut rng) == 1)
        .count();
    let p = 16.0 / 17.0;
    let sigma = (draws as f64 * p * (1.0 - p)).sqrt();
    assert!(
        (hits as f64 - draws as f64 * p).abs() < 4.0 * sigma,
        "{hits}"
    );
}

#[test]
fn per_ant_streams_are_independent_of_order() {
    let mut a = ant_rng(9, 3, 4);
    let mut b = ant_rng(9, 3, 4);
    let mut c = ant_rng(9, 3, 5);
    use rand::Rng;
    let (x, y, z): (u64, u64, u64) = (a.random(), b.random(), c.random());
    assert_eq!(x, y);
    assert_ne!(x, z);
}

#[test]
fn karate_every_mode() {
    let g = datasets::karate();
    for mode in ReinforcementMode::ALL {
        let cfg = SolverConfig {
            iterations: 200,
            seed: 11,
            ..Default::default()
        }
        .with_mode(mode);
        let rec = solver::run(&g, &cfg).unwrap();
        assert_eq!(rec.best.size(), 5, "{mode}");
    }
}

#[test]
fn persistence_and_fixed_alpha_run() {
    let g = datasets::karate();
    let cfg = SolverConfig {
        iterations: 100,
        evaporation: Evaporation::Persistence,
        alpha_schedule: AlphaMode::Fixed,
        alpha: 2.5,
        ..Default::default()
    };
    let rec = solver::run(&g, &cfg).unwrap();
    assert!(rec.log.iter().all(|l| l.alpha == 2.5));
    assert!(is_maximal(&g, &rec.best));
}

#[test]
fn invalid_configs_are_rejected() {
    let g = Graph::complete(3);
    for bad in [
        SolverConfig {
            iterations: 0,
            ..Default::default()
        },
        SolverConfig {
            rho0: 1.5,
            ..Default::default()
        },
        SolverConfig {
            tau_min: 7.0,
            ..Default::default()
        },
        SolverConfig {
            c2: -1.0,
            ..Default::default()
        },
        SolverConfig {
            phi: f64::NAN,
            ..Default::default()
        },
    ] {
        assert!(solver::run(&g, &bad).is_err(), "{bad:?}");
    }
    assert!(SolverConfig::from_toml_str("antz = 3").is_err());
}
