//! Ten seeded runs of the swarm-tuned update and of the quality-gap baseline
//! on karate and a random graph, printed as a side-by-side comparison.
//!
//! cargo run --release --example compare_reinforcement

use clique_swarm::bench::{self, DatasetSpec, ReportFormat, SuiteConfig};
use clique_swarm::solver::ReinforcementMode;
use clique_swarm::{datasets, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    let suite = SuiteConfig {
        datasets: vec![
            DatasetSpec::from_graph("karate", datasets::karate()),
            DatasetSpec::from_graph("G(100,0.3)", Graph::gnp(100, 0.3, &mut rng)),
        ],
        algorithms: vec![ReinforcementMode::Pso, ReinforcementMode::QualityGap],
        runs: 10,
        iterations: 1000,
        base_seed: 1,
        oracle_check: true,
        ..SuiteConfig::default()
    };
    let report = bench::run_suite(&suite).expect("suite runs");
    print!(
        "{}",
        bench::emit_report(&report, ReportFormat::Markdown).expect("markdown")
    );

    let cmp = bench::compare(
        &report.for_algorithm(ReinforcementMode::Pso),
        &report.for_algorithm(ReinforcementMode::QualityGap),
    )
    .expect("same datasets");
    println!();
    println!("{cmp}");
}
