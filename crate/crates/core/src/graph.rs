//! Simple undirected graphs with constant-time adjacency tests, and the clique
//! primitives every solver in the crate is built on.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Undirected simple graph on vertices `0..n`.
///
/// Adjacency is stored twice: one bitset row per vertex for O(1) membership
/// and bulk intersection, and a sorted neighbor list for iteration.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    neighbors: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
    dropped_self_loops: usize,
}

impl Graph {
    /// Graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect(),
            neighbors: vec![Vec::new(); n],
            edges: Vec::new(),
            labels: None,
            dropped_self_loops: 0,
        }
    }

    /// Build from an edge iterator. Self-loops are dropped and counted,
    /// duplicate and reversed pairs collapse into one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                g.dropped_self_loops += 1;
                continue;
            }
            set.insert((u.min(v), u.max(v)));
        }
        for &(u, v) in &set {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
            g.neighbors[u].push(v);
            g.neighbors[v].push(u);
        }
        for row in &mut g.neighbors {
            row.sort_unstable();
        }
        g.edges = set.into_iter().collect();
        Ok(g)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("indices in range")
    }

    /// Erdős–Rényi G(n, p): each of the n(n−1)/2 pairs is an edge
    /// independently with probability `p`.
    pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random::<f64>() < p {
                    edges.push((u, v));
                }
            }
        }
        Self::from_edges(n, edges).expect("indices in range")
    }

    /// Attach display labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of undirected edges.
    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n() == 0
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Sorted neighbors of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Adjacency row of `v` as a bitset over `0..n`.
    #[inline]
    pub fn adjacency(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label when present, the index otherwise.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Self-loops discarded while building this graph.
    pub fn dropped_self_loops(&self) -> usize {
        self.dropped_self_loops
    }

    /// Re-check every structural invariant. Used by tests and debug assertions.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.n();
        let mut count = 0;
        for u in 0..n {
            if self.adj[u].len() != n {
                return Err(format!("row {u} has width {}", self.adj[u].len()));
            }
            if self.adj[u].contains(u) {
                return Err(format!("self-loop at {u}"));
            }
            for v in self.adj[u].ones() {
                if !self.adj[v].contains(u) {
                    return Err(format!("asymmetric edge {u}-{v}"));
                }
            }
            let listed: Vec<usize> = self.adj[u].ones().collect();
            if listed != self.neighbors[u] {
                return Err(format!("neighbor list of {u} disagrees with bitset"));
            }
            count += listed.len();
        }
        if count != 2 * self.edges.len() {
            return Err("edge list disagrees with adjacency".into());
        }
        if self.edges.windows(2).any(|w| w[0] >= w[1]) {
            return Err("edge list not strictly sorted".into());
        }
        if self.edges.iter().any(|&(u, v)| u >= v || v >= n) {
            return Err("edge list holds an unnormalized pair".into());
        }
        Ok(())
    }
}

/// A vertex set certified to be a complete subgraph of the graph it was
/// checked against. Members are kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Clique {
    members: Vec<usize>,
}

impl Clique {
    /// Verify `members` against `g` and wrap them.
    pub fn new(g: &Graph, members: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if is_clique(g, &members)? {
            Ok(Self { members })
        } else {
            Err(GraphError::NotAClique)
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Caller guarantees `members` is a sorted, duplicate-free clique.
    pub(crate) fn from_sorted_unchecked(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self { members }
    }

    #[inline]
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// Unordered member pairs, i.e. the edges the clique spans.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.members
            .iter()
            .enumerate()
            .flat_map(move |(i, &u)| self.members[i + 1..].iter().map(move |&v| (u, v)))
    }
}

impl fmt::Display for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// True iff every unordered pair of distinct vertices in `s` is an edge.
pub fn is_clique(g: &Graph, s: &[usize]) -> Result<bool, GraphError> {
    if let Some(&v) = s.iter().find(|&&v| v >= g.n()) {
        return Err(GraphError::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    for (i, &u) in s.iter().enumerate() {
        for &v in &s[i + 1..] {
            if u != v && !g.has_edge(u, v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Bitset of vertices outside `c` adjacent to every member of `c`.
pub fn candidate_set(g: &Graph, c: &Clique) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(g.n());
    match c.members().split_first() {
        None => set.insert_range(..),
        Some((&first, rest)) => {
            set.union_with(g.adjacency(first));
            for &u in rest {
                set.intersect_with(g.adjacency(u));
            }
        }
    }
    set
}

/// Vertices that extend `c` to a larger clique, in increasing order.
/// Every vertex is a candidate for the empty clique.
pub fn candidates(g: &Graph, c: &Clique) -> Vec<usize> {
    candidate_set(g, c).ones().collect()
}

/// True when no vertex extends `c`.
pub fn is_maximal(g: &Graph, c: &Clique) -> bool {
    !g.is_empty() && candidate_set(g, c).is_clear()
}

/// Vertex and degree statistics.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphSummary {
    pub nodes: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub mean_degree: f64,
}

pub fn summarize(g: &Graph) -> GraphSummary {
    let degrees = (0..g.n()).map(|v| g.degree(v));
    let (min_degree, max_degree) = degrees
        .fold(None, |acc: Option<(usize, usize)>, d| match acc {
            None => Some((d, d)),
            Some((lo, hi)) => Some((lo.min(d), hi.max(d))),
        })
        .unwrap_or((0, 0));
    let mean_degree = if g.is_empty() {
        0.0
    } else {
        2.0 * g.m() as f64 / g.n() as f64
    };
    GraphSummary {
        nodes: g.n(),
        edges: g.m(),
        min_degree,
        max_degree,
        mean_degree,
    }
}

impl fmt::Display for GraphSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nodes: {}", self.nodes)?;
        writeln!(f, "edges: {}", self.edges)?;
        writeln!(f, "min degree: {}", self.min_degree)?;
        writeln!(f, "max degree: {}", self.max_degree)?;
        write!(f, "mean degree: {:.3}", self.mean_degree)
    }
}
