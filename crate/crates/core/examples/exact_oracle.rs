//! Exact maximum clique and maximal-clique enumeration on karate, and a
//! budgeted search on a denser random graph that may stop early.
//!
//! cargo run --release --example exact_oracle

use std::time::Duration;

use clique_swarm::{datasets, enumerate_maximal_cliques, max_clique_exact, Budget, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let g = datasets::karate();
    let r = max_clique_exact(&g, Budget::unlimited());
    println!(
        "karate: omega = {} after {} search nodes ({:.2?})",
        r.optimum_size, r.explored_nodes, r.elapsed
    );
    println!("  witness: {}", r.best);

    let all = enumerate_maximal_cliques(&g, 10_000);
    let mut hist = std::collections::BTreeMap::new();
    for c in &all.cliques {
        *hist.entry(c.size()).or_insert(0usize) += 1;
    }
    println!("  {} maximal cliques, by size: {hist:?}", all.cliques.len());

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let dense = Graph::gnp(300, 0.7, &mut rng);
    let r = max_clique_exact(&dense, Budget::time(Duration::from_millis(500)));
    let status = if r.completed {
        "optimal"
    } else {
        "lower bound, budget exhausted"
    };
    println!("G(300, 0.7): clique of size {} ({status})", r.optimum_size);
}
