//! Exhaustive addition search for graphs whose complement is small.
//!
//! The greedy extension planner can commit to a witness that leaves a
//! complete component next to an isolated vertex, after which no addition
//! repairs connectivity. When the complement has few edges, trying every
//! addition set in order of size settles feasibility exactly.

use crate::graph::Graph;

use super::EditOp;

/// Largest complement searched; `2^20` subsets at most.
pub const MAX_SEARCH_ADDITIONS: usize = 20;

/// A minimum set of additions making `g` Eulerian, `Some(None)` if none
/// exists, or `None` when the complement is too large or `n > 64`.
pub(super) fn min_additions(g: &Graph) -> Option<Option<Vec<EditOp>>> {
    if g.n() > 64 {
        return None;
    }
    if g.n() * g.n().saturating_sub(1) / 2 - g.m() > MAX_SEARCH_ADDITIONS {
        return None;
    }
    let candidates: Vec<_> = g.complement().edges().collect();
    let masks: Vec<u64> = candidates
        .iter()
        .map(|e| (1u64 << e.u()) | (1u64 << e.v()))
        .collect();
    let odd: u64 = g.odd_vertices().iter().fold(0, |acc, &v| acc | 1 << v);
    let start = g.odd_count() / 2;

    for k in start..=candidates.len() {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let parity = idx.iter().fold(0u64, |acc, &i| acc ^ masks[i]);
            if parity == odd {
                let mut h = g.clone();
                for &i in &idx {
                    h.insert_edge(candidates[i].u(), candidates[i].v());
                }
                if h.is_eulerian() {
                    let ops = idx
                        .iter()
                        .map(|&i| EditOp::add(candidates[i].u(), candidates[i].v()))
                        .collect();
                    return Some(Some(ops));
                }
            }
            if !next_combination(&mut idx, candidates.len()) {
                break;
            }
        }
    }
    Some(None)
}

/// Advances `idx` to the next `k`-subset of `0..len` in lexicographic order.
fn next_combination(idx: &mut [usize], len: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < len - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}
