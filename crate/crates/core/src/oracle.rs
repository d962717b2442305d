//! Exact answers for small graphs.
//!
//! Edit searches encode a graph on `n ≤ 11` vertices as a 64-bit mask over
//! its vertex pairs in lexicographic order. Every Eulerian test goes through
//! [`Graph::is_eulerian`], so oracle and planners share one predicate.

use std::collections::HashMap;

use crate::editors::{EditMode, EditOp, EditPlan};
use crate::error::{Error, Result};
use crate::graph::{pair_count, Graph, Vertex};
use crate::sampler::check_probability;

/// Largest `n` accepted by [`enumerate_graphs`] (2^15 graphs).
pub const MAX_ENUMERATION_N: usize = 6;
/// Largest `n` whose pair set fits the 64-bit state mask.
pub const MAX_SEARCH_N: usize = 11;
/// Largest `n` accepted by [`max_clique_exact`].
pub const MAX_CLIQUE_N: usize = 64;

/// All `2^C(n,2)` labeled graphs on `n` vertices in edge-mask order.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::invalid(format!(
            "enumeration limited to n <= {MAX_ENUMERATION_N}, got {n}"
        )));
    }
    let total = 1u64 << pair_count(n);
    Ok((0..total).map(move |mask| Graph::from_edge_mask(n, mask)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleValue {
    /// Minimum number of toggles.
    Exact(usize),
    /// The mode-reachable state space contains no Eulerian graph.
    Infeasible,
    /// Nothing found within the depth budget, unexplored states remain.
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub value: OracleValue,
    /// A minimum plan, present exactly when `value` is `Exact`.
    pub witness: Option<EditPlan>,
    /// States (BFS) or candidate toggle sets (iterative deepening) checked.
    pub explored: usize,
}

impl OracleResult {
    pub fn exact(&self) -> Option<usize> {
        match self.value {
            OracleValue::Exact(k) => Some(k),
            _ => None,
        }
    }
}

struct Space {
    n: usize,
    pairs: Vec<(Vertex, Vertex)>,
    mode: EditMode,
}

impl Space {
    fn new(g: &Graph, mode: EditMode) -> Result<Self> {
        if g.n() > MAX_SEARCH_N {
            return Err(Error::invalid(format!(
                "exact search limited to n <= {MAX_SEARCH_N}, got {}",
                g.n()
            )));
        }
        let n = g.n();
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Ok(Space { n, pairs, mode })
    }

    fn allowed(&self, mask: u64, k: usize) -> bool {
        let present = mask >> k & 1 == 1;
        match self.mode {
            EditMode::Edit => true,
            EditMode::Extend => !present,
            EditMode::Reduce => present,
        }
    }

    fn eulerian(&self, mask: u64) -> bool {
        Graph::from_edge_mask(self.n, mask).is_eulerian()
    }

    /// Ops toggling pair indices `path` in order, starting from `start`.
    fn plan_for(&self, g: &Graph, start: u64, path: &[usize]) -> EditPlan {
        let mut mask = start;
        let ops = path
            .iter()
            .map(|&k| {
                let (u, v) = self.pairs[k];
                let op = if mask >> k & 1 == 1 {
                    EditOp::remove(u, v)
                } else {
                    EditOp::add(u, v)
                };
                mask ^= 1 << k;
                op
            })
            .collect();
        EditPlan {
            ops,
            ..EditPlan::empty(self.mode, g)
        }
    }
}

/// Breadth-first search from `g` over graphs reachable by the toggles the
/// mode allows, to depth at most `budget`. States are deduplicated.
pub fn exact_edit_number(g: &Graph, mode: EditMode, budget: usize) -> Result<OracleResult> {
    let space = Space::new(g, mode)?;
    let start = g.edge_mask();
    let mut parent: HashMap<u64, (u64, usize)> = HashMap::new();
    parent.insert(start, (start, usize::MAX));
    let mut frontier = vec![start];
    let mut explored = 0;
    let mut depth = 0;

    loop {
        for &state in &frontier {
            explored += 1;
            if space.eulerian(state) {
                let mut path = Vec::new();
                let mut cur = state;
                while cur != start {
                    let (prev, k) = parent[&cur];
                    path.push(k);
                    cur = prev;
                }
                path.reverse();
                return Ok(OracleResult {
                    value: OracleValue::Exact(depth),
                    witness: Some(space.plan_for(g, start, &path)),
                    explored,
                });
            }
        }

        let mut next = Vec::new();
        for &state in &frontier {
            for k in 0..space.pairs.len() {
                if !space.allowed(state, k) {
                    continue;
                }
                let succ = state ^ (1 << k);
                if let std::collections::hash_map::Entry::Vacant(slot) = parent.entry(succ) {
                    if depth == budget {
                        return Ok(OracleResult {
                            value: OracleValue::BudgetExhausted,
                            witness: None,
                            explored,
                        });
                    }
                    slot.insert((state, k));
                    next.push(succ);
                }
            }
        }
        if next.is_empty() {
            return Ok(OracleResult {
                value: OracleValue::Infeasible,
                witness: None,
                explored,
            });
        }
        frontier = next;
        depth += 1;
    }
}

/// Iterative deepening over sets of distinct allowed toggles. Independent
/// of [`exact_edit_number`]: no state deduplication, it enumerates toggle
/// combinations of growing size instead.
pub fn exact_edit_number_iddfs(g: &Graph, mode: EditMode, budget: usize) -> Result<OracleResult> {
    let space = Space::new(g, mode)?;
    let start = g.edge_mask();
    let candidates: Vec<usize> = (0..space.pairs.len())
        .filter(|&k| space.allowed(start, k))
        .collect();
    let mut explored = 0;

    fn search(
        space: &Space,
        mask: u64,
        candidates: &[usize],
        left: usize,
        chosen: &mut Vec<usize>,
        explored: &mut usize,
    ) -> bool {
        if left == 0 {
            *explored += 1;
            return space.eulerian(mask);
        }
        for (i, &k) in candidates.iter().enumerate() {
            if candidates.len() - i < left {
                break;
            }
            chosen.push(k);
            if search(space, mask ^ (1 << k), &candidates[i + 1..], left - 1, chosen, explored) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    for depth in 0..=budget {
        if depth > candidates.len() {
            return Ok(OracleResult {
                value: OracleValue::Infeasible,
                witness: None,
                explored,
            });
        }
        let mut chosen = Vec::with_capacity(depth);
        if search(&space, start, &candidates, depth, &mut chosen, &mut explored) {
            return Ok(OracleResult {
                value: OracleValue::Exact(depth),
                witness: Some(space.plan_for(g, start, &chosen)),
                explored,
            });
        }
    }
    let value = if budget >= candidates.len() {
        OracleValue::Infeasible
    } else {
        OracleValue::BudgetExhausted
    };
    Ok(OracleResult {
        value,
        witness: None,
        explored,
    })
}

/// Clique number by branch and bound with a greedy-coloring bound.
pub fn max_clique_exact(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > MAX_CLIQUE_N {
        return Err(Error::invalid(format!(
            "exact clique limited to n <= {MAX_CLIQUE_N}, got {n}"
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |acc, w| acc | 1 << w))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 1;
    expand_clique(&adj, all, 0, &mut best);
    Ok(best)
}

fn expand_clique(adj: &[u64], candidates: u64, size: usize, best: &mut usize) {
    // Greedy color classes; a vertex's color bounds the clique it can extend.
    let mut order = Vec::with_capacity(candidates.count_ones() as usize);
    let mut uncolored = candidates;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut class = uncolored;
        while class != 0 {
            let v = class.trailing_zeros() as usize;
            class &= !(1 << v) & !adj[v];
            uncolored &= !(1 << v);
            order.push((v, color));
        }
    }

    let mut remaining = candidates;
    for &(v, color) in order.iter().rev() {
        if size + color <= *best {
            return;
        }
        let next = remaining & adj[v];
        if next == 0 {
            *best = (*best).max(size + 1);
        } else {
            expand_clique(adj, next, size + 1, best);
        }
        remaining &= !(1 << v);
    }
}

/// Exact probabilities for the first `b` vertices of `G(n, p)` all having
/// odd degree, by summing over every graph on `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParityStats {
    /// P(vertices 0..b all odd)
    pub joint: f64,
    /// Product of the single-vertex marginals.
    pub product: f64,
    /// |joint − product|
    pub deviation: f64,
}

pub fn exact_parity_stats(n: usize, p: f64, b: usize) -> Result<ParityStats> {
    check_probability(p)?;
    if n > MAX_ENUMERATION_N {
        return Err(Error::invalid(format!(
            "exact parity statistics limited to n <= {MAX_ENUMERATION_N}, got {n}"
        )));
    }
    if b < 1 || b > n {
        return Err(Error::invalid(format!("b = {b} outside 1..={n}")));
    }
    let pairs = pair_count(n) as i32;
    let mut joint = 0.0;
    let mut marginal = vec![0.0; b];
    for g in enumerate_graphs(n)? {
        let m = g.m() as i32;
        let weight = p.powi(m) * (1.0 - p).powi(pairs - m);
        let odd: Vec<bool> = (0..b).map(|v| g.degree(v) % 2 == 1).collect();
        for (acc, &is_odd) in marginal.iter_mut().zip(&odd) {
            if is_odd {
                *acc += weight;
            }
        }
        if odd.iter().all(|&o| o) {
            joint += weight;
        }
    }
    let product: f64 = marginal.iter().product();
    Ok(ParityStats {
        joint,
        product,
        deviation: (joint - product).abs(),
    })
}
