//! Acceptance checks, one test per criterion. Each prints a single
//! `PASS`/`FAIL` line; run with `--nocapture` to see them all.

mod common;

use std::time::{Duration, Instant};

use clique_swarm::bench::{self, aggregate, DatasetSpec, ReportFormat, SuiteConfig};
use clique_swarm::solver::{
    self, alpha_schedule, pso_velocity, pso_velocity_with, rho_schedule, select_vertex,
    PheromoneState, PsoCoefficients, ReinforcementMode, RunRecord, SolverConfig,
};
use clique_swarm::{datasets, is_clique, is_maximal, max_clique_exact, Budget, Clique, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const RUNS: u64 = 10;

fn verdict(id: &str, pass: bool, detail: impl AsRef<str>) {
    println!(
        "criterion {id}: {} | {}",
        if pass { "PASS" } else { "FAIL" },
        detail.as_ref()
    );
}

/// One run with every emitted clique checked: all ant solutions of every
/// iteration, and the returned best. Returns the record and the number of
/// solutions that were not maximal cliques.
fn checked_run(g: &Graph, cfg: &SolverConfig) -> (RunRecord, usize, usize) {
    let mut seen = 0;
    let mut bad = 0;
    let rec = solver::run_with(g, cfg, |view| {
        for c in view.ant_cliques {
            seen += 1;
            if !(is_clique(g, c.members()).unwrap() && is_maximal(g, c)) {
                bad += 1;
            }
        }
    })
    .unwrap();
    seen += 1;
    if !(is_clique(g, rec.best.members()).unwrap() && is_maximal(g, &rec.best)) {
        bad += 1;
    }
    (rec, seen, bad)
}

struct Protocol {
    sizes: Vec<usize>,
    checked: usize,
    invalid: usize,
    elapsed: Duration,
}

/// Ten runs with the default settings, seeds 1..=10.
fn protocol(g: &Graph, mode: ReinforcementMode) -> Protocol {
    let start = Instant::now();
    let runs: Vec<(usize, usize, usize)> = (1..=RUNS)
        .into_par_iter()
        .map(|seed| {
            let (rec, seen, bad) =
                checked_run(g, &SolverConfig::default().with_mode(mode).with_seed(seed));
            (rec.best.size(), seen, bad)
        })
        .collect();
    Protocol {
        sizes: runs.iter().map(|r| r.0).collect(),
        checked: runs.iter().map(|r| r.1).sum(),
        invalid: runs.iter().map(|r| r.2).sum(),
        elapsed: start.elapsed(),
    }
}

fn dolphins() -> Result<Graph, String> {
    datasets::dolphins(None).map_err(|e| e.to_string())
}

fn best_size_reproduction(id: &str, name: &str, g: &Graph) {
    let p = protocol(g, ReinforcementMode::Pso);
    let (best, avg, std) = aggregate(&p.sizes);
    let pass = best == 5 && avg >= 4.8 && p.invalid == 0;
    verdict(
        id,
        pass,
        format!(
            "{name}: Best {best} (want 5), Avg {avg:.3} (want >= 4.8), Std {std:.3}, sizes {:?}, {:.1?}",
            p.sizes, p.elapsed
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_01_karate_best_size() {
    best_size_reproduction("1", "karate", &datasets::karate());
}

#[test]
fn criterion_02_dolphins_best_size() {
    match dolphins() {
        Ok(g) => best_size_reproduction("2", "dolphins", &g),
        Err(e) => {
            verdict("2", false, format!("dolphins unavailable: {e}"));
            panic!("dolphins unavailable: {e}");
        }
    }
}

fn oracle_agreement(id: &str, name: &str, g: &Graph) {
    let r = max_clique_exact(g, Budget::time(Duration::from_secs(60)));
    let p = protocol(g, ReinforcementMode::Pso);
    let heuristic = p.sizes.iter().copied().max().unwrap();
    let pass = r.completed && r.optimum_size == 5 && heuristic == r.optimum_size;
    verdict(
        id,
        pass,
        format!(
            "{name}: exact {} (completed {}, {:.1?}), heuristic Best {heuristic}",
            r.optimum_size, r.completed, r.elapsed
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_03_oracle_agreement_karate() {
    oracle_agreement("3 (karate)", "karate", &datasets::karate());
}

#[test]
fn criterion_03_oracle_agreement_dolphins() {
    match dolphins() {
        Ok(g) => oracle_agreement("3 (dolphins)", "dolphins", &g),
        Err(e) => {
            verdict("3 (dolphins)", false, format!("dolphins unavailable: {e}"));
            panic!("dolphins unavailable: {e}");
        }
    }
}

#[test]
fn criterion_04_oracle_dominance() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let ps = [0.2, 0.5, 0.8];
    let cases: Vec<Graph> = (0..200)
        .map(|i| {
            let n = rand::Rng::random_range(&mut rng, 1..=15);
            Graph::gnp(n, ps[i % 3], &mut rng)
        })
        .collect();
    let start = Instant::now();
    let outcomes: Vec<(usize, usize, usize, usize)> = cases
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let cfg = SolverConfig::default()
                .with_iterations(200)
                .with_seed(i as u64);
            let (rec, _, bad) = checked_run(g, &cfg);
            (
                rec.best.size(),
                common::omega(g),
                max_clique_exact(g, Budget::unlimited()).optimum_size,
                bad,
            )
        })
        .collect();
    let above = outcomes.iter().filter(|o| o.0 > o.1).count();
    let equal = outcomes.iter().filter(|o| o.0 == o.1).count();
    let oracle_off = outcomes.iter().filter(|o| o.2 != o.1).count();
    let invalid: usize = outcomes.iter().map(|o| o.3).sum();
    let rate = equal as f64 / outcomes.len() as f64;
    let pass = above == 0 && rate >= 0.95 && oracle_off == 0 && invalid == 0;
    verdict(
        "4",
        pass,
        format!(
            "200 graphs: heuristic above optimum {above}, equal {equal} ({:.1}%, want >= 95%), \
             exact vs exhaustive disagreements {oracle_off}, {:.1?}",
            100.0 * rate,
            start.elapsed()
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_05_clique_validity() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut graphs = vec![datasets::karate(), Graph::gnp(100, 0.3, &mut rng)];
    if let Ok(g) = dolphins() {
        graphs.push(g);
    }
    graphs.extend((0..30).map(|i| Graph::gnp(5 + i, [0.2, 0.5, 0.8][i % 3], &mut rng)));
    let mut checked = 0;
    let mut invalid = 0;
    for g in &graphs {
        for mode in ReinforcementMode::ALL {
            let p = protocol(g, mode);
            checked += p.checked;
            invalid += p.invalid;
        }
    }
    let pass = invalid == 0 && checked > 0;
    verdict(
        "5",
        pass,
        format!(
            "{checked} emitted solutions checked on {} graphs, {invalid} invalid",
            graphs.len()
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_06_schedule_exactness() {
    let ts = [1, 100, 101, 400, 401, 800, 801, 1000];
    let want = [1, 1, 2, 2, 3, 3, 4, 4];
    let got: Vec<u32> = ts.iter().map(|&t| alpha_schedule(t)).collect();
    let alpha_ok = got == want;

    let phi = 0.0002;
    let mut rho_ok = rho_schedule(0.95, phi) == 0.95 * (1.0 - phi);
    let mut rho = 0.95;
    for _ in 0..1000 {
        let next = rho_schedule(rho, phi);
        rho_ok &= next == ((1.0 - phi) * rho).min(0.95);
        rho = next;
    }
    let cap_ok = rho_schedule(0.99, 0.0) == 0.95
        && rho_schedule(0.999, phi) == 0.95
        && rho_schedule(1.0, phi) == 0.95;
    let pass = alpha_ok && rho_ok && cap_ok;
    verdict(
        "6",
        pass,
        format!(
            "alpha at {ts:?} = {got:?}; rho recurrence exact {rho_ok}; cap above 0.95 {cap_ok}"
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_07_velocity_algebra() {
    let k = PsoCoefficients {
        c1: 0.3,
        c2: 0.7,
        c3: 0.3,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let fixed_point = (0..1000)
        .map(|_| (pso_velocity(2.0, 0.4, 0.4, 0.4, k, &mut rng) - 0.6).abs())
        .fold(0.0, f64::max);
    let forced_one = (pso_velocity_with(0.0, 0.0, 1.0, 1.0, k, 1.0, 1.0) - 1.0).abs();
    let forced_zero = (pso_velocity_with(1.0, 0.25, 0.8, 1.0, k, 0.0, 0.0) - 0.3).abs();
    let worst = fixed_point.max(forced_one).max(forced_zero);
    let pass = worst <= 1e-12;
    verdict(
        "7",
        pass,
        format!("|err| fixed point {fixed_point:.1e}, r=1 case {forced_one:.1e}, r=0 case {forced_zero:.1e} (tol 1e-12)"),
    );
    assert!(pass);
}

#[test]
fn criterion_08_selection_law() {
    // vertex 0 in the clique; candidates 1 and 2 score 2 and 1
    let g = Graph::complete(3);
    let mut ph = PheromoneState::new(&g, 0.01, 6.0, 1.0);
    ph.set(0, 1, 2.0);
    ph.set(0, 2, 1.0);
    let c = Clique::new(&g, [0]).unwrap();
    let draws = 100_000usize;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let ones = (0..draws)
        .filter(|_| select_vertex(&[1, 2], &c, &ph, 1.0, &mut rng) == 1)
        .count();
    let p = 2.0 / 3.0;
    let sigma = (draws as f64 * p * (1.0 - p)).sqrt();
    let z = (ones as f64 - draws as f64 * p) / sigma;
    let pass = z.abs() <= 3.0;
    verdict(
        "8",
        pass,
        format!(
            "frequencies {:.4} / {:.4} vs 2/3, 1/3; z = {z:.2} (within 3 sigma)",
            ones as f64 / draws as f64,
            1.0 - ones as f64 / draws as f64
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_09_determinism() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let graphs = [datasets::karate(), Graph::gnp(100, 0.3, &mut rng)];
    let mut records_equal = true;
    for g in &graphs {
        for mode in ReinforcementMode::ALL {
            let cfg = SolverConfig {
                iterations: 300,
                seed: 99,
                ..Default::default()
            }
            .with_mode(mode);
            let seq = solver::run(g, &cfg).unwrap().deterministic_fingerprint();
            let again = solver::run(g, &cfg).unwrap().deterministic_fingerprint();
            let par = solver::run(
                g,
                &SolverConfig {
                    parallel: true,
                    ..cfg.clone()
                },
            )
            .unwrap()
            .deterministic_fingerprint();
            records_equal &= seq == again && seq == par;
        }
    }

    let suite = SuiteConfig {
        datasets: graphs
            .iter()
            .enumerate()
            .map(|(i, g)| DatasetSpec::from_graph(format!("g{i}"), g.clone()))
            .collect(),
        runs: 4,
        iterations: 200,
        solver: SolverConfig {
            parallel: true,
            ..Default::default()
        },
        ..SuiteConfig::default()
    };
    let render = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        let mut r = pool
            .install(|| bench::run_suite(&suite))
            .unwrap()
            .without_timings();
        r.environment.threads = 0;
        [
            ReportFormat::Markdown,
            ReportFormat::Csv,
            ReportFormat::Json,
        ]
        .map(|f| bench::emit_report(&r, f).unwrap())
    };
    let one = render(1);
    let many = render(8);
    let reports_equal = one == many;
    let pass = records_equal && reports_equal;
    verdict(
        "9",
        pass,
        format!("run records identical sequential vs parallel: {records_equal}; reports identical on 1 vs 8 threads: {reports_equal}"),
    );
    assert!(pass);
}

#[test]
fn criterion_10_large_graph_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let g = Graph::gnp(1000, 0.01, &mut rng);
    let start = Instant::now();
    let outcomes: Vec<(usize, usize, bool)> = (1..=RUNS)
        .into_par_iter()
        .map(|seed| {
            let cfg = SolverConfig::default().with_seed(seed);
            let mut violations = 0;
            let mut last = None;
            let rec = solver::run_with(&g, &cfg, |view| {
                if view.pheromone.check_invariants().is_err() || view.state.delta_tau < 0.0 {
                    violations += 1;
                }
                for c in view.ant_cliques {
                    if !(is_clique(&g, c.members()).unwrap() && is_maximal(&g, c)) {
                        violations += 1;
                    }
                }
                if view.t == cfg.iterations {
                    last = Some(view.pheromone.only_on_edges());
                }
            })
            .unwrap();
            (rec.log.len(), violations, last == Some(true))
        })
        .collect();
    let completed = outcomes.iter().filter(|o| o.0 == 1000).count();
    let violations: usize = outcomes.iter().map(|o| o.1).sum();
    let sparse = outcomes.iter().all(|o| o.2);
    let pass = completed == RUNS as usize && violations == 0 && sparse;
    verdict(
        "10 (large graph)",
        pass,
        format!(
            "G(1000, 0.01) with {} edges: {completed}/10 runs of 1000 iterations, {violations} invariant violations, {:.1?}",
            g.m(),
            start.elapsed()
        ),
    );
    println!(
        "criterion 10 (note): absolute run-times, run-time ratios between the two algorithms, \
         and the largest catalog graphs at full scale are not checked here"
    );
    assert!(pass);
}

fn comparative(name: &str, g: &Graph) -> (bool, String) {
    let pso = protocol(g, ReinforcementMode::Pso);
    let base = protocol(g, ReinforcementMode::QualityGap);
    let (_, a, _) = aggregate(&pso.sizes);
    let (_, b, _) = aggregate(&base.sizes);
    let ok = a >= b && pso.invalid == 0 && base.invalid == 0;
    (ok, format!("{name}: Avg ACO-PSO {a:.3} vs ACO {b:.3}"))
}

#[test]
fn criterion_10_comparative() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    let (k_ok, k) = comparative("karate", &datasets::karate());
    let (r_ok, r) = comparative("G(100, 0.3)", &Graph::gnp(100, 0.3, &mut rng));
    let pass = k_ok && r_ok;
    verdict("10 (comparative)", pass, format!("{k}; {r}"));
    assert!(pass);
}

#[test]
fn criterion_10_comparative_dolphins() {
    match dolphins() {
        Ok(g) => {
            let (pass, detail) = comparative("dolphins", &g);
            verdict("10 (comparative, dolphins)", pass, detail);
            assert!(pass);
        }
        Err(e) => {
            verdict(
                "10 (comparative, dolphins)",
                false,
                format!("dolphins unavailable: {e}"),
            );
            panic!("dolphins unavailable: {e}");
        }
    }
}
