//! Maximum-clique search on social-network graphs.
//!
//! The crate pairs an ant colony solver, whose pheromone reinforcement can be
//! driven by a particle-swarm update, with an exact branch-and-bound referee
//! and a benchmark harness for repeated seeded runs.
//!
//! ```
//! use clique_swarm::{datasets, solver::{self, SolverConfig}};
//!
//! let g = datasets::karate();
//! let cfg = SolverConfig { iterations: 50, seed: 7, ..SolverConfig::default() };
//! let record = solver::run(&g, &cfg).unwrap();
//! assert!(record.best.size() >= 4);
//! ```

pub mod bench;
pub mod cli;
pub mod datasets;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{candidates, is_clique, is_maximal, summarize, Clique, Graph, GraphSummary};
pub use io::{parse_edge_list, parse_gml, parse_pajek, read_graph, to_edge_list, GraphFormat};
pub use oracle::{
    enumerate_maximal_cliques, max_clique_exact, Budget, MaximalCliques, OracleResult,
};
