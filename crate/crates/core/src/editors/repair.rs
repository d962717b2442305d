//! Parity-preserving connectivity repair.
//!
//! Both routines assume every degree is already even and merge the other
//! components into a main component one at a time.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

use super::{EditMode, EditOp};

fn push(work: &mut Graph, ops: &mut Vec<EditOp>, op: EditOp) {
    op.apply_to(work).expect("repair op must be applicable");
    ops.push(op);
}

fn spanning_cycle(work: &mut Graph, ops: &mut Vec<EditOp>) {
    let n = work.n();
    for v in 1..n {
        push(work, ops, EditOp::add(v - 1, v));
    }
    push(work, ops, EditOp::add(0, n - 1));
}

/// Index of the component to merge into: the one holding vertex 0 if it has
/// an edge, otherwise the first component that has one.
fn main_component(components: &[Vec<Vertex>]) -> Option<usize> {
    if components[0].len() > 1 {
        return Some(0);
    }
    components.iter().position(|c| c.len() > 1)
}

/// Lexicographically smallest edge inside a connected vertex set with at
/// least two members.
fn first_edge(work: &Graph, comp: &[Vertex]) -> (Vertex, Vertex) {
    let a = comp[0];
    let b = work.neighbors(a).next().expect("component with an edge");
    (a, b)
}

/// Edit-mode repair. A component with an edge `(v, w)` is merged with
/// Add(u, v), Add(u, w), Remove(v, w) for `u` the smallest main vertex; an
/// isolated vertex `c` is merged with Add(c, a), Add(c, b), Remove(a, b)
/// for the smallest main edge `(a, b)`. Every step keeps all parities.
pub(super) fn connect_with_toggles(work: &mut Graph, ops: &mut Vec<EditOp>) -> Result<()> {
    if work.is_eulerian() {
        return Ok(());
    }
    if work.n() < 3 {
        return Err(Error::RepairFailed(EditMode::Edit));
    }
    debug_assert_eq!(work.odd_count(), 0);
    if work.m() == 0 {
        spanning_cycle(work, ops);
        return Ok(());
    }
    let components = work.components();
    let main_idx = main_component(&components).expect("graph has an edge");
    let u = components[main_idx][0];

    for (idx, comp) in components.iter().enumerate() {
        if idx == main_idx {
            continue;
        }
        if comp.len() > 1 {
            let (v, w) = first_edge(work, comp);
            push(work, ops, EditOp::add(u, v));
            push(work, ops, EditOp::add(u, w));
            push(work, ops, EditOp::remove(v, w));
        } else {
            // The main component only grows, so its first edge is re-read.
            let (a, b) = first_edge(work, &components[main_idx]);
            let c = comp[0];
            push(work, ops, EditOp::add(c, a));
            push(work, ops, EditOp::add(c, b));
            push(work, ops, EditOp::remove(a, b));
        }
    }
    debug_assert!(work.is_connected());
    Ok(())
}

/// Addition-only repair. Merges use a triangle through one absent pair
/// inside a component, a 4-cycle across two components, or a triangle
/// spanning three components, whichever applies first.
pub(super) fn connect_with_additions(work: &mut Graph, ops: &mut Vec<EditOp>) -> Result<()> {
    if work.is_eulerian() {
        return Ok(());
    }
    if work.n() < 3 {
        return Err(Error::NotExtendable(format!(
            "no Eulerian graph on {} vertices",
            work.n()
        )));
    }
    debug_assert_eq!(work.odd_count(), 0);
    if work.m() == 0 {
        spanning_cycle(work, ops);
        return Ok(());
    }

    loop {
        let components = work.components();
        if components.len() == 1 {
            return Ok(());
        }
        let main_idx = main_component(&components).unwrap_or(0);
        if !merge_by_additions(work, ops, &components, main_idx) {
            return Err(Error::NotExtendable(format!(
                "cannot join {} components by additions without breaking parity",
                components.len()
            )));
        }
    }
}

fn absent_pair(work: &Graph, comp: &[Vertex]) -> Option<(Vertex, Vertex)> {
    comp.iter().enumerate().find_map(|(i, &x)| {
        comp[i + 1..]
            .iter()
            .find(|&&y| !work.has_edge(x, y))
            .map(|&y| (x, y))
    })
}

fn merge_by_additions(
    work: &mut Graph,
    ops: &mut Vec<EditOp>,
    components: &[Vec<Vertex>],
    main_idx: usize,
) -> bool {
    let main = &components[main_idx];
    let others = || {
        components
            .iter()
            .enumerate()
            .filter(move |&(i, _)| i != main_idx)
            .map(|(_, c)| c)
    };

    for comp in others() {
        if let Some((v, w)) = absent_pair(work, comp) {
            let u = main[0];
            for op in [EditOp::add(u, v), EditOp::add(u, w), EditOp::add(v, w)] {
                push(work, ops, op);
            }
            return true;
        }
        if let Some((u, u2)) = absent_pair(work, main) {
            let v = comp[0];
            for op in [EditOp::add(u, v), EditOp::add(u2, v), EditOp::add(u, u2)] {
                push(work, ops, op);
            }
            return true;
        }
        if main.len() >= 2 && comp.len() >= 2 {
            let (u, u2, v, v2) = (main[0], main[1], comp[0], comp[1]);
            for op in [EditOp::add(u, v), EditOp::add(v, u2), EditOp::add(u2, v2), EditOp::add(v2, u)] {
                push(work, ops, op);
            }
            return true;
        }
    }

    let mut rest = others();
    if let (Some(c1), Some(c2)) = (rest.next(), rest.next()) {
        let (u, v, w) = (main[0], c1[0], c2[0]);
        for op in [EditOp::add(u, v), EditOp::add(u, w), EditOp::add(v, w)] {
            push(work, ops, op);
        }
        return true;
    }
    false
}
