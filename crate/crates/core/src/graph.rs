//! Simple undirected graphs on the dense vertex set `0..n`.
//!
//! Adjacency is kept as one bit row per vertex. Iterating a row yields the
//! neighbors in ascending order, which every planner relies on for its
//! deterministic tie-breaking, and edge membership and common-neighbor
//! queries reduce to word-level bit operations.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An unordered vertex pair stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    /// Builds the normalized pair. Panics on a self-loop.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        assert_ne!(a, b, "self-loop {a}-{a}");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn u(&self) -> Vertex {
        self.u
    }

    pub fn v(&self) -> Vertex {
        self.v
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Simple undirected graph: no loops, no parallel edges, symmetric adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new(n);
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::invalid(format!(
                    "edge ({a}, {b}) has an endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::invalid(format!("self-loop at vertex {a}")));
            }
            if !g.insert_edge(a, b) {
                return Err(Error::invalid(format!("duplicate edge ({a}, {b})")));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// The cycle `0-1-…-(n-1)-0`; for `n < 3` this is the path on `n` vertices.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.insert_edge(0, n - 1);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.insert_edge(v - 1, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    /// Inserts `{u, v}`; returns false if it was already present.
    ///
    /// Panics on a loop or an out-of-range endpoint.
    pub fn insert_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u}, {v})");
        if self.adj[u].put(v) {
            return false;
        }
        self.adj[v].insert(u);
        self.m += 1;
        true
    }

    /// Removes `{u, v}`; returns false if it was absent.
    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
        self.m -= 1;
        true
    }

    /// Flips the presence of `{u, v}` and returns whether it is now present.
    pub fn toggle_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if self.remove_edge(u, v) {
            false
        } else {
            self.insert_edge(u, v)
        }
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].ones()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Odd-degree vertices, ascending. Always of even cardinality.
    pub fn odd_vertices(&self) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.degree(v) % 2 == 1).collect()
    }

    pub fn odd_count(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) % 2 == 1).count()
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .ones()
                .filter(move |&v| v > u)
                .map(move |v| Edge { u, v })
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reachable_from(0).count_ones(..) == self.n
    }

    fn reachable_from(&self, start: Vertex) -> FixedBitSet {
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u].ones() {
                if !seen.put(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut assigned = FixedBitSet::with_capacity(self.n);
        let mut out = Vec::new();
        for v in 0..self.n {
            if assigned.contains(v) {
                continue;
            }
            let comp = self.reachable_from(v);
            assigned.union_with(&comp);
            out.push(comp.ones().collect());
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut adj = self.adj.clone();
        for (v, row) in adj.iter_mut().enumerate() {
            row.toggle_range(..);
            row.set(v, false);
        }
        let total = self.n * self.n.saturating_sub(1) / 2;
        Graph {
            n: self.n,
            m: total - self.m,
            adj,
        }
    }

    fn check_pair(&self, u: Vertex, v: Vertex) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::invalid(format!(
                "vertex pair ({u}, {v}) out of range for n = {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("vertices must differ, got {u} twice")));
        }
        Ok(())
    }

    /// Vertices other than `u`, `v` adjacent to both, ascending.
    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> Result<Vec<Vertex>> {
        self.check_pair(u, v)?;
        Ok(self.common_neighbors_iter(u, v).collect())
    }

    pub(crate) fn common_neighbors_iter(
        &self,
        u: Vertex,
        v: Vertex,
    ) -> impl Iterator<Item = Vertex> + '_ {
        // Loops are excluded, so u and v never appear in their own rows.
        let (small, large) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        let other = &self.adj[large];
        self.adj[small].ones().filter(move |&w| other.contains(w))
    }

    pub fn has_common_neighbor(&self, u: Vertex, v: Vertex) -> bool {
        !self.adj[u].is_disjoint(&self.adj[v])
    }

    /// True iff every pair of distinct vertices has a common neighbor.
    pub fn every_pair_has_common_neighbor(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.has_common_neighbor(u, v)))
    }

    /// Whether `{u, v}` is present and lies in a triangle, so removing it
    /// cannot disconnect the graph.
    pub fn edge_in_triangle(&self, u: Vertex, v: Vertex) -> bool {
        self.has_edge(u, v) && self.has_common_neighbor(u, v)
    }

    /// Bit `k` of the mask is edge number `k` in lexicographic pair order.
    /// Only defined for graphs whose pair count fits in 64 bits (`n ≤ 11`).
    pub fn edge_mask(&self) -> u64 {
        let mut mask = 0u64;
        for e in self.edges() {
            mask |= 1 << pair_index(self.n, e.u, e.v);
        }
        mask
    }

    pub fn from_edge_mask(n: usize, mask: u64) -> Graph {
        let mut g = Graph::new(n);
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> k & 1 == 1 {
                    g.insert_edge(u, v);
                }
                k += 1;
            }
        }
        g
    }
}

/// Position of the pair `(u, v)`, `u < v`, in lexicographic order over all
/// pairs of `0..n`.
pub fn pair_index(n: usize, u: Vertex, v: Vertex) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Number of vertex pairs, `C(n, 2)`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().map(|e| e.endpoints()).collect::<Vec<_>>())
            .finish()
    }
}
