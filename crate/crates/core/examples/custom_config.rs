//! Solver settings from TOML: a fixed α, persistence-style evaporation, and
//! a small colony. Unknown keys are rejected.
//!
//! cargo run --release --example custom_config

use clique_swarm::datasets;
use clique_swarm::solver::{self, SolverConfig};

const SETTINGS: &str = r#"
ants = 10
iterations = 300
alpha_schedule = "fixed"
alpha = 2.0
evaporation = "persistence"
reinforcement_mode = "quality_gap"
seed = 42
"#;

fn main() {
    let cfg = SolverConfig::from_toml_str(SETTINGS).expect("valid settings");
    let rec = solver::run(&datasets::karate(), &cfg).expect("runs");
    println!("best size {} found {}", rec.best.size(), rec.best);
    let first = rec
        .best_size_per_iteration()
        .iter()
        .position(|&s| s == rec.best.size())
        .map_or(0, |i| i + 1);
    println!("reached at iteration {first} of {}", cfg.iterations);

    match SolverConfig::from_toml_str("ants = 10\nant_count = 3\n") {
        Ok(_) => println!("unexpected: typo accepted"),
        Err(e) => println!("rejected: {e}"),
    }

    println!("\nfull settings:\n{}", cfg.to_toml_string());
}
