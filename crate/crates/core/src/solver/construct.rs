//! Probabilistic clique construction by a single ant.

use rand::Rng;

use super::pheromone::PheromoneState;
use crate::graph::{Clique, Graph};

/// Roulette-wheel draw: index `i` with probability `weights[i] / Σ weights`.
/// Falls back to a uniform draw when the weights carry no information
/// (all zero, or overflowed).
pub(crate) fn roulette<R: Rng + ?Sized>(weights: &[f64], rng: &mut R) -> usize {
    assert!(!weights.is_empty(), "roulette over an empty candidate set");
    let total: f64 = weights.iter().sum();
    if !(total.is_finite() && total > 0.0) {
        return rng.random_range(0..weights.len());
    }
    let mut target = rng.random::<f64>() * total;
    for (i, &w) in weights.iter().enumerate() {
        if target < w {
            return i;
        }
        target -= w;
    }
    // rounding left a sliver past the last bucket
    weights
        .iter()
        .rposition(|&w| w > 0.0)
        .expect("positive total")
}

#[inline]
fn weight(score: f64, alpha: f64) -> f64 {
    if alpha == 1.0 {
        score
    } else {
        score.powf(alpha)
    }
}

/// Pick the next vertex to add to `c` from `candidates`.
///
/// Each candidate `v` is weighted by `(Σ_{u∈c} τ_uv)^alpha`. For an empty
/// clique the draw is uniform.
///
/// Panics if `candidates` is empty.
pub fn select_vertex<R: Rng + ?Sized>(
    candidates: &[usize],
    c: &Clique,
    ph: &PheromoneState,
    alpha: f64,
    rng: &mut R,
) -> usize {
    assert!(
        !candidates.is_empty(),
        "select_vertex needs at least one candidate"
    );
    if c.is_empty() {
        return candidates[rng.random_range(0..candidates.len())];
    }
    let weights: Vec<f64> = candidates
        .iter()
        .map(|&v| weight(ph.attachment_score(v, c), alpha))
        .collect();
    candidates[roulette(&weights, rng)]
}

/// Grow one maximal clique: a uniformly random start vertex, then repeated
/// pheromone-weighted extension until no candidate is left.
pub fn construct_clique<R: Rng + ?Sized>(
    g: &Graph,
    ph: &PheromoneState,
    alpha: f64,
    rng: &mut R,
) -> Clique {
    assert!(!g.is_empty(), "cannot build a clique in an empty graph");
    let start = rng.random_range(0..g.n());
    let mut members = vec![start];
    let mut cand = g.adjacency(start).clone();
    let mut scores = ph.row(start).to_vec();

    let mut list = Vec::new();
    let mut weights = Vec::new();
    loop {
        list.clear();
        list.extend(cand.ones());
        if list.is_empty() {
            break;
        }
        weights.clear();
        weights.extend(list.iter().map(|&v| weight(scores[v], alpha)));
        let v = list[roulette(&weights, rng)];
        members.push(v);
        cand.intersect_with(g.adjacency(v));
        let row = ph.row(v);
        for u in cand.ones() {
            scores[u] += row[u];
        }
    }
    members.sort_unstable();
    Clique::from_sorted_unchecked(members)
}
