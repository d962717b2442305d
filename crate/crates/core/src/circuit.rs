//! Eulerian predicate and circuit extraction.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

/// Which of the three Eulerian conditions a graph fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EulerCondition {
    Parity,
    Connectivity,
    TooFewEdges,
}

impl fmt::Display for EulerCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EulerCondition::Parity => "parity",
            EulerCondition::Connectivity => "connectivity",
            EulerCondition::TooFewEdges => "too-few-edges",
        })
    }
}

/// Why a graph is not Eulerian. Conditions are checked in the order
/// parity, connectivity, edge count; the first failure is reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EulerFailure {
    Parity { odd: Vec<Vertex> },
    Disconnected { components: usize },
    TooFewEdges { m: usize },
}

impl EulerFailure {
    pub fn condition(&self) -> EulerCondition {
        match self {
            EulerFailure::Parity { .. } => EulerCondition::Parity,
            EulerFailure::Disconnected { .. } => EulerCondition::Connectivity,
            EulerFailure::TooFewEdges { .. } => EulerCondition::TooFewEdges,
        }
    }
}

impl fmt::Display for EulerFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EulerFailure::Parity { odd } => {
                f.write_str("odd-degree vertices")?;
                for v in odd {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
            EulerFailure::Disconnected { components } => {
                write!(f, "graph has {components} connected components")
            }
            EulerFailure::TooFewEdges { m } => {
                write!(f, "graph has {m} edges, a circuit needs at least 3")
            }
        }
    }
}

/// Minimum edge count of an Eulerian graph (a circuit has length ≥ 3).
pub const MIN_EULERIAN_EDGES: usize = 3;

impl Graph {
    /// Checks the Eulerian conditions: every degree even, connected on all
    /// `n` vertices, and at least three edges.
    pub fn eulerian_check(&self) -> Result<(), EulerFailure> {
        let odd = self.odd_vertices();
        if !odd.is_empty() {
            return Err(EulerFailure::Parity { odd });
        }
        if !self.is_connected() {
            return Err(EulerFailure::Disconnected {
                components: self.components().len(),
            });
        }
        if self.m() < MIN_EULERIAN_EDGES {
            return Err(EulerFailure::TooFewEdges { m: self.m() });
        }
        Ok(())
    }

    pub fn is_eulerian(&self) -> bool {
        self.eulerian_check().is_ok()
    }

    /// Extracts an Euler circuit with iterative Hierholzer, always following
    /// the smallest-labeled unused edge.
    pub fn euler_circuit(&self) -> Result<EulerCircuit> {
        self.eulerian_check().map_err(Error::NotEulerian)?;

        let n = self.n();
        // Lists come out ascending because edges() is lexicographic.
        let mut nbrs: Vec<Vec<(Vertex, usize)>> = vec![Vec::new(); n];
        for (id, e) in self.edges().enumerate() {
            nbrs[e.u()].push((e.v(), id));
            nbrs[e.v()].push((e.u(), id));
        }
        let mut next = vec![0usize; n];
        let mut used = vec![false; self.m()];

        let mut stack = vec![0];
        let mut out = Vec::with_capacity(self.m() + 1);
        while let Some(&u) = stack.last() {
            let list = &nbrs[u];
            while next[u] < list.len() && used[list[next[u]].1] {
                next[u] += 1;
            }
            if let Some(&(w, id)) = list.get(next[u]) {
                used[id] = true;
                stack.push(w);
            } else {
                out.push(u);
                stack.pop();
            }
        }
        out.reverse();
        out.pop();
        Ok(EulerCircuit { walk: out })
    }
}

/// Closed walk listed without repeating the start vertex; the last vertex
/// is adjacent to the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerCircuit {
    walk: Vec<Vertex>,
}

/// Reasons a walk fails to be an Euler circuit of a given graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CircuitError {
    TooShort(usize),
    NotAnEdge(Vertex, Vertex),
    RepeatedEdge(Edge),
    MissingEdges(usize),
}

impl fmt::Display for CircuitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CircuitError::TooShort(t) => write!(f, "walk of length {t} is shorter than 3"),
            CircuitError::NotAnEdge(u, v) => write!(f, "consecutive vertices {u} {v} are not adjacent"),
            CircuitError::RepeatedEdge(e) => write!(f, "edge {e} traversed twice"),
            CircuitError::MissingEdges(k) => write!(f, "{k} edges never traversed"),
        }
    }
}

impl std::error::Error for CircuitError {}

impl EulerCircuit {
    pub fn walk(&self) -> &[Vertex] {
        &self.walk
    }

    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    /// Independent check against `g`: cyclic adjacency, no edge reused, and
    /// every edge covered.
    pub fn verify(&self, g: &Graph) -> Result<(), CircuitError> {
        verify_walk(&self.walk, g)
    }
}

pub fn verify_walk(walk: &[Vertex], g: &Graph) -> Result<(), CircuitError> {
    let t = walk.len();
    if t < 3 {
        return Err(CircuitError::TooShort(t));
    }
    let mut seen = std::collections::HashSet::with_capacity(t);
    for i in 0..t {
        let (a, b) = (walk[i], walk[(i + 1) % t]);
        if a == b || !g.has_edge(a, b) {
            return Err(CircuitError::NotAnEdge(a, b));
        }
        let e = Edge::new(a, b);
        if !seen.insert(e) {
            return Err(CircuitError::RepeatedEdge(e));
        }
    }
    if seen.len() != g.m() {
        return Err(CircuitError::MissingEdges(g.m() - seen.len()));
    }
    Ok(())
}
