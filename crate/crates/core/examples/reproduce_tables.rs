//! Ten runs of 1000 iterations per algorithm on the small social graphs,
//! as Best/Avg/Std/Run-time tables. Dolphins is included when
//! `dolphins.gml` is found in the data directory.
//!
//! cargo run --release --example reproduce_tables -- [markdown|csv|json]

use clique_swarm::bench::{self, DatasetSpec, ReportFormat, SuiteConfig};
use clique_swarm::datasets;
use clique_swarm::solver::ReinforcementMode;

fn main() {
    let format: ReportFormat = std::env::args()
        .nth(1)
        .map_or(Ok(ReportFormat::Markdown), |s| s.parse())
        .unwrap_or_else(|e| {
            eprintln!("{e}");
            std::process::exit(1)
        });

    let mut sets = vec![DatasetSpec::from_graph("I", datasets::karate())];
    match datasets::dolphins(None) {
        Ok(g) => sets.push(DatasetSpec::from_graph("IV", g)),
        Err(e) => eprintln!("skipping dolphins: {e}"),
    }
    let suite = SuiteConfig {
        datasets: sets,
        algorithms: vec![ReinforcementMode::Pso, ReinforcementMode::QualityGap],
        runs: 10,
        iterations: 1000,
        base_seed: 0,
        oracle_check: true,
        ..SuiteConfig::default()
    };
    let report = bench::run_suite(&suite).expect("suite runs");
    print!(
        "{}",
        bench::emit_report(&report, format).expect("report renders")
    );
}
