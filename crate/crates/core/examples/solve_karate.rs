//! One ACO-PSO run on Zachary's karate club with the default settings,
//! printing the best clique and a thinned trace of the reinforcement amount.
//!
//! cargo run --release --example solve_karate -- [seed]

use clique_swarm::datasets;
use clique_swarm::solver::{self, SolverConfig};

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let g = datasets::karate();
    let cfg = SolverConfig::default().with_seed(seed);
    let rec = solver::run(&g, &cfg).expect("default config is valid");

    let names: Vec<String> = rec.best.members().iter().map(|&v| g.label(v)).collect();
    println!(
        "best clique ({} vertices): {}",
        rec.best.size(),
        names.join(" ")
    );
    println!("wall time: {:.2?}", rec.wall_time);
    println!();
    println!(
        "{:>5} {:>5} {:>8} {:>9} {:>10} {:>10}",
        "t", "alpha", "rho", "iter/best", "delta_tau", "velocity"
    );
    for line in rec.log.iter().filter(|l| l.t == 1 || l.t % 100 == 0) {
        println!(
            "{:>5} {:>5} {:>8.5} {:>4}/{:<4} {:>10.4} {:>10.4}",
            line.t,
            line.alpha,
            line.rho,
            line.iter_best_size,
            line.global_best_size,
            line.delta_tau,
            line.velocity
        );
    }
}
