//! Brute-force references shared by the integration tests. They use nothing
//! from the crate beyond adjacency queries, so they can referee it.

#![allow(dead_code)]

use std::collections::BTreeSet;

use clique_swarm::Graph;
use proptest::prelude::*;

/// Adjacency rows as bitmasks; only for n <= 20.
pub fn masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 20);
    (0..g.n())
        .map(|u| {
            (0..g.n())
                .filter(|&v| g.has_edge(u, v))
                .fold(0u32, |m, v| m | 1 << v)
        })
        .collect()
}

pub fn mask_is_clique(adj: &[u32], s: u32) -> bool {
    (0..adj.len())
        .filter(|&v| s >> v & 1 == 1)
        .all(|v| s & !(1 << v) & !adj[v] == 0)
}

/// Clique number by trying every vertex subset.
pub fn omega(g: &Graph) -> usize {
    let adj = masks(g);
    (0u32..1 << g.n())
        .filter(|&s| mask_is_clique(&adj, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Every maximal clique, by exhaustive search.
pub fn maximal_cliques(g: &Graph) -> BTreeSet<Vec<usize>> {
    let adj = masks(g);
    let n = g.n();
    let mut out = BTreeSet::new();
    for s in 1u32..1 << n {
        if !mask_is_clique(&adj, s) {
            continue;
        }
        let extendable = (0..n).any(|v| s >> v & 1 == 0 && s & !adj[v] == 0);
        if !extendable {
            out.insert((0..n).filter(|&v| s >> v & 1 == 1).collect());
        }
    }
    out
}

/// Vertices outside `c` adjacent to all of `c`, straight from the definition.
pub fn common_neighbors(g: &Graph, c: &[usize]) -> Vec<usize> {
    (0..g.n())
        .filter(|v| !c.contains(v) && c.iter().all(|&u| g.has_edge(u, *v)))
        .collect()
}

/// Random simple graph on `lo..=hi` vertices as (n, edge list).
pub fn edge_lists(lo: usize, hi: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (lo..=hi, 0.0f64..1.0).prop_flat_map(|(n, p)| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let k = pairs.len();
        proptest::collection::vec(proptest::bool::weighted(p.clamp(0.01, 0.99)), k).prop_map(
            move |keep| {
                (
                    n,
                    pairs
                        .iter()
                        .zip(keep)
                        .filter(|(_, k)| *k)
                        .map(|(e, _)| *e)
                        .collect(),
                )
            },
        )
    })
}

pub fn graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    edge_lists(lo, hi).prop_map(|(n, e)| Graph::from_edges(n, e).unwrap())
}
