use crate::graph::{Clique, Graph};

use super::config::Evaporation;

/// Trail levels τ on the edges of one graph, kept inside `[tau_min, tau_max]`.
///
/// Stored as a dense symmetric `n × n` matrix so a row can be scanned while
/// scoring candidates; entries for non-edges are zero and never touched.
#[derive(Clone, Debug, PartialEq)]
pub struct PheromoneState {
    n: usize,
    tau: Vec<f64>,
    edges: Vec<(usize, usize)>,
    tau_min: f64,
    tau_max: f64,
}

impl PheromoneState {
    /// Every edge starts at `initial`, clamped to the bounds.
    pub fn new(g: &Graph, tau_min: f64, tau_max: f64, initial: f64) -> Self {
        assert!(tau_min < tau_max, "tau_min must be below tau_max");
        let n = g.n();
        let mut ph = Self {
            n,
            tau: vec![0.0; n * n],
            edges: g.edges().to_vec(),
            tau_min,
            tau_max,
        };
        let initial = ph.clamp(initial);
        for &(u, v) in g.edges() {
            ph.store(u, v, initial);
        }
        ph
    }

    #[inline]
    fn clamp(&self, x: f64) -> f64 {
        x.clamp(self.tau_min, self.tau_max)
    }

    #[inline]
    fn store(&mut self, u: usize, v: usize, x: f64) {
        self.tau[u * self.n + v] = x;
        self.tau[v * self.n + u] = x;
    }

    pub fn tau_min(&self) -> f64 {
        self.tau_min
    }

    pub fn tau_max(&self) -> f64 {
        self.tau_max
    }

    /// Trail on edge `{u, v}`, or `None` if it is not an edge.
    pub fn get(&self, u: usize, v: usize) -> Option<f64> {
        self.edges
            .binary_search(&(u.min(v), u.max(v)))
            .ok()
            .map(|_| self.tau[u * self.n + v])
    }

    /// Set the trail on an existing edge, clamped. Returns false for non-edges.
    pub fn set(&mut self, u: usize, v: usize, value: f64) -> bool {
        if self.edges.binary_search(&(u.min(v), u.max(v))).is_err() {
            return false;
        }
        let x = self.clamp(value);
        self.store(u, v, x);
        true
    }

    /// Row `u` of the matrix; non-edges read as zero.
    #[inline]
    pub(crate) fn row(&self, u: usize) -> &[f64] {
        &self.tau[u * self.n..(u + 1) * self.n]
    }

    /// Attachment score of `v` to clique `c`: Σ_{u ∈ c} τ_uv.
    pub fn attachment_score(&self, v: usize, c: &Clique) -> f64 {
        c.members().iter().map(|&u| self.tau[u * self.n + v]).sum()
    }

    /// Multiplicative decay of every trail, then clamp.
    pub fn evaporate(&mut self, rho: f64, mode: Evaporation) {
        let keep = match mode {
            Evaporation::Literal => 1.0 - rho,
            Evaporation::Persistence => rho,
        };
        for i in 0..self.edges.len() {
            let (u, v) = self.edges[i];
            let x = self.clamp(keep * self.tau[u * self.n + v]);
            self.store(u, v, x);
        }
    }

    /// Add `delta` to every edge spanned by `c`, then clamp.
    pub fn reinforce(&mut self, c: &Clique, delta: f64) {
        if delta == 0.0 {
            return;
        }
        for (u, v) in c.pairs() {
            let x = self.clamp(self.tau[u * self.n + v] + delta);
            self.store(u, v, x);
        }
    }

    /// (u, v, τ) for every edge, `u < v`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.edges
            .iter()
            .map(move |&(u, v)| (u, v, self.tau[u * self.n + v]))
    }

    /// Bounds and symmetry on every edge. O(m).
    pub fn check_invariants(&self) -> Result<(), String> {
        for &(u, v) in &self.edges {
            let a = self.tau[u * self.n + v];
            let b = self.tau[v * self.n + u];
            if a != b {
                return Err(format!("asymmetric trail on {u}-{v}: {a} vs {b}"));
            }
            if !(self.tau_min..=self.tau_max).contains(&a) {
                return Err(format!(
                    "trail {a} on {u}-{v} outside [{}, {}]",
                    self.tau_min, self.tau_max
                ));
            }
        }
        Ok(())
    }

    /// True when no trail is stored off the edge set. O(n²).
    pub fn only_on_edges(&self) -> bool {
        let nonzero = self.tau.iter().filter(|&&x| x != 0.0).count();
        nonzero <= 2 * self.edges.len()
    }
}
