//! Exact maximum-clique search and maximal-clique enumeration for graphs of
//! modest size. Both are used as referees for the heuristic solvers.

use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::graph::{Clique, Graph};

/// Optional limits for [`max_clique_exact`]. Hitting either one ends the
/// search early with `completed = false`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }

    pub fn time(max_time: Duration) -> Self {
        Self {
            max_nodes: None,
            max_time: Some(max_time),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleResult {
    pub best: Clique,
    pub optimum_size: usize,
    pub explored_nodes: u64,
    pub elapsed: Duration,
    /// False when the budget ran out; `best` is then only a lower bound.
    pub completed: bool,
}

struct Search<'g> {
    g: &'g Graph,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: Budget,
    start: Instant,
    aborted: bool,
}

impl Search<'_> {
    fn out_of_budget(&mut self) -> bool {
        if self.aborted {
            return true;
        }
        let over_nodes = self.budget.max_nodes.is_some_and(|m| self.nodes >= m);
        // clock reads are comparatively slow, sample them
        let over_time = self.nodes.is_multiple_of(256)
            && self
                .budget
                .max_time
                .is_some_and(|t| self.start.elapsed() >= t);
        self.aborted = over_nodes || over_time;
        self.aborted
    }

    /// Greedy sequential coloring of `p`. Returns vertices in non-decreasing
    /// color order together with their color numbers (1-based).
    fn color_sort(&self, p: &FixedBitSet) -> Vec<(usize, usize)> {
        let mut order = Vec::with_capacity(p.count_ones(..));
        let mut uncolored = p.clone();
        let mut color = 0;
        while !uncolored.is_clear() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.minimum() {
                q.set(v, false);
                uncolored.set(v, false);
                q.difference_with(self.g.adjacency(v));
                order.push((v, color));
            }
        }
        order
    }

    fn expand(&mut self, mut p: FixedBitSet) {
        self.nodes += 1;
        if self.out_of_budget() {
            return;
        }
        let order = self.color_sort(&p);
        for &(v, color) in order.iter().rev() {
            if self.current.len() + color <= self.best.len() {
                return;
            }
            self.current.push(v);
            let mut next = p.clone();
            next.intersect_with(self.g.adjacency(v));
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            p.set(v, false);
            if self.aborted {
                return;
            }
        }
    }
}

/// Maximum clique by branch and bound with a greedy-coloring upper bound.
///
/// The search order is fixed, so repeated calls return the same witness.
pub fn max_clique_exact(g: &Graph, budget: Budget) -> OracleResult {
    let start = Instant::now();
    let mut search = Search {
        g,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        budget,
        start,
        aborted: false,
    };
    if !g.is_empty() {
        let mut all = FixedBitSet::with_capacity(g.n());
        all.insert_range(..);
        search.expand(all);
    }
    let mut members = search.best;
    members.sort_unstable();
    OracleResult {
        optimum_size: members.len(),
        best: Clique::from_sorted_unchecked(members),
        explored_nodes: search.nodes,
        elapsed: start.elapsed(),
        completed: !search.aborted,
    }
}

#[derive(Clone, Debug, Default)]
pub struct MaximalCliques {
    pub cliques: Vec<Clique>,
    /// Set when enumeration stopped at the cap with cliques left unreported.
    pub truncated: bool,
}

struct Enumeration<'g> {
    g: &'g Graph,
    cap: usize,
    out: Vec<Clique>,
    truncated: bool,
}

impl Enumeration<'_> {
    fn bron_kerbosch(&mut self, r: &mut Vec<usize>, mut p: FixedBitSet, mut x: FixedBitSet) {
        if self.truncated {
            return;
        }
        if p.is_clear() {
            if x.is_clear() {
                if self.out.len() == self.cap {
                    self.truncated = true;
                    return;
                }
                let mut members = r.clone();
                members.sort_unstable();
                self.out.push(Clique::from_sorted_unchecked(members));
            }
            return;
        }
        // Tomita pivot: the vertex of P ∪ X with most neighbors in P.
        let pivot = p
            .union(&x)
            .max_by_key(|&u| {
                (
                    p.intersection(self.g.adjacency(u)).count(),
                    std::cmp::Reverse(u),
                )
            })
            .expect("P is non-empty");
        let mut branch = p.clone();
        branch.difference_with(self.g.adjacency(pivot));
        for v in branch.ones() {
            let adj = self.g.adjacency(v);
            let mut np = p.clone();
            np.intersect_with(adj);
            let mut nx = x.clone();
            nx.intersect_with(adj);
            r.push(v);
            self.bron_kerbosch(r, np, nx);
            r.pop();
            p.set(v, false);
            x.insert(v);
            if self.truncated {
                return;
            }
        }
    }
}

/// All maximal cliques, by Bron–Kerbosch with pivoting. At most `cap`
/// cliques are returned.
pub fn enumerate_maximal_cliques(g: &Graph, cap: usize) -> MaximalCliques {
    let mut e = Enumeration {
        g,
        cap,
        out: Vec::new(),
        truncated: false,
    };
    if !g.is_empty() {
        let mut p = FixedBitSet::with_capacity(g.n());
        p.insert_range(..);
        e.bron_kerbosch(&mut Vec::new(), p, FixedBitSet::with_capacity(g.n()));
    }
    MaximalCliques {
        cliques: e.out,
        truncated: e.truncated,
    }
}
