use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

use super::{parity_lower_bound, EditMode, EditOp, EditPlan};

/// Pairs odd vertices consecutively in ascending order and toggles the edge
/// of each pair. Afterwards every degree is even; connectivity is not
/// checked here.
pub fn plan_edit(g: &Graph) -> EditPlan {
    let odd = g.odd_vertices();
    let mut plan = EditPlan::empty(EditMode::Edit, g);
    for pair in odd.chunks_exact(2) {
        let (u, v) = (pair[0], pair[1]);
        plan.ops.push(EditOp::toggle_in(g, u, v));
        plan.pairing.push((u, v));
    }
    plan
}

/// Addition-only parity fix.
///
/// Odd vertices are scanned in ascending order and each unmarked one is
/// joined to the first later unmarked odd vertex it is not adjacent to. The
/// leftover odd vertices form a clique; they are paired and each pair is
/// joined through a witness vertex adjacent to neither endpoint.
pub fn plan_extend(g: &Graph) -> Result<EditPlan> {
    let odd = g.odd_vertices();
    let mut plan = EditPlan::empty(EditMode::Extend, g);
    let mut work = g.clone();
    let mut marked = vec![false; odd.len()];

    for i in 0..odd.len() {
        if marked[i] {
            continue;
        }
        let partner = (i + 1..odd.len()).find(|&j| !marked[j] && !work.has_edge(odd[i], odd[j]));
        if let Some(j) = partner {
            work.insert_edge(odd[i], odd[j]);
            plan.ops.push(EditOp::add(odd[i], odd[j]));
            plan.pairing.push((odd[i], odd[j]));
            marked[i] = true;
            marked[j] = true;
        }
    }

    plan.residual = unmarked(&odd, &marked);
    let mut search = ResidualSearch::new(odd.len());
    if !search.extend(&mut work, &plan.residual, &mut plan.ops, &mut plan.pairing) {
        return Err(Error::NotExtendable(format!(
            "no witness vertex for residual odd clique {:?}",
            plan.residual
        )));
    }
    Ok(plan)
}

/// Removal-only parity fix.
///
/// Only edges lying in a triangle of the current working graph are removed,
/// so no removal disconnects anything. Odd vertices are scanned in ascending
/// order and adjacent unmarked pairs lose their shared edge. Each leftover
/// pair is then fixed by removing both edges to a common neighbor.
pub fn plan_reduce(g: &Graph) -> Result<EditPlan> {
    let odd = g.odd_vertices();
    let mut plan = EditPlan::empty(EditMode::Reduce, g);
    let mut work = g.clone();
    let mut marked = vec![false; odd.len()];
    let connected = g.is_connected();

    for i in 0..odd.len() {
        if marked[i] {
            continue;
        }
        let partner = (i + 1..odd.len()).find(|&j| !marked[j] && work.edge_in_triangle(odd[i], odd[j]));
        if let Some(j) = partner {
            work.remove_edge(odd[i], odd[j]);
            debug_assert!(!connected || work.is_connected());
            plan.ops.push(EditOp::remove(odd[i], odd[j]));
            plan.pairing.push((odd[i], odd[j]));
            marked[i] = true;
            marked[j] = true;
        }
    }

    plan.residual = unmarked(&odd, &marked);
    let mut search = ResidualSearch::new(odd.len());
    if !search.reduce(&mut work, &plan.residual, &mut plan.ops, &mut plan.pairing) {
        return Err(Error::NotReducible(format!(
            "no bridge-safe removal pairs residual odd vertices {:?}",
            plan.residual
        )));
    }
    debug_assert!(!connected || work.is_connected());
    if work.m() < crate::circuit::MIN_EULERIAN_EDGES {
        return Err(Error::NotReducible(format!(
            "only {} edges would remain",
            work.m()
        )));
    }
    debug_assert_eq!(plan.lower_bound, parity_lower_bound(g));
    Ok(plan)
}

fn unmarked(odd: &[Vertex], marked: &[bool]) -> Vec<Vertex> {
    odd.iter()
        .zip(marked)
        .filter(|(_, &m)| !m)
        .map(|(&v, _)| v)
        .collect()
}

/// Backtracking over partner and witness choices for the residual odd
/// vertices, capped at `2T` partner attempts. The first branch explored is
/// the consecutive ascending pairing with the smallest witness.
struct ResidualSearch {
    attempts: usize,
    limit: usize,
}

impl ResidualSearch {
    fn new(odd_count: usize) -> Self {
        ResidualSearch {
            attempts: 0,
            limit: 2 * odd_count,
        }
    }

    fn extend(
        &mut self,
        work: &mut Graph,
        rest: &[Vertex],
        ops: &mut Vec<EditOp>,
        pairing: &mut Vec<(Vertex, Vertex)>,
    ) -> bool {
        let Some((&w, others)) = rest.split_first() else {
            return true;
        };
        for (k, &w2) in others.iter().enumerate() {
            self.attempts += 1;
            if self.attempts > self.limit {
                return false;
            }
            let witnesses: Vec<Vertex> = (0..work.n())
                .filter(|&z| z != w && z != w2 && !work.has_edge(w, z) && !work.has_edge(w2, z))
                .collect();
            for z in witnesses {
                work.insert_edge(w, z);
                work.insert_edge(w2, z);
                ops.push(EditOp::add(w, z));
                ops.push(EditOp::add(w2, z));
                pairing.push((w, w2));
                let remaining = without(others, k);
                if self.extend(work, &remaining, ops, pairing) {
                    return true;
                }
                pairing.pop();
                ops.truncate(ops.len() - 2);
                work.remove_edge(w, z);
                work.remove_edge(w2, z);
            }
        }
        false
    }

    fn reduce(
        &mut self,
        work: &mut Graph,
        rest: &[Vertex],
        ops: &mut Vec<EditOp>,
        pairing: &mut Vec<(Vertex, Vertex)>,
    ) -> bool {
        let Some((&w, others)) = rest.split_first() else {
            return true;
        };
        for (k, &w2) in others.iter().enumerate() {
            self.attempts += 1;
            if self.attempts > self.limit {
                return false;
            }
            let hubs: Vec<Vertex> = work.common_neighbors_iter(w, w2).collect();
            for s in hubs {
                if !work.edge_in_triangle(w, s) {
                    continue;
                }
                work.remove_edge(w, s);
                if work.edge_in_triangle(w2, s) {
                    work.remove_edge(w2, s);
                    ops.push(EditOp::remove(w, s));
                    ops.push(EditOp::remove(w2, s));
                    pairing.push((w, w2));
                    let remaining = without(others, k);
                    if self.reduce(work, &remaining, ops, pairing) {
                        return true;
                    }
                    pairing.pop();
                    ops.truncate(ops.len() - 2);
                    work.insert_edge(w2, s);
                }
                work.insert_edge(w, s);
            }
        }
        false
    }
}

fn without(items: &[Vertex], skip: usize) -> Vec<Vertex> {
    items
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != skip)
        .map(|(_, &v)| v)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::editors::{apply_plan, EditKind};

    fn c6_chord() -> Graph {
        let mut g = Graph::cycle(6);
        g.insert_edge(0, 2);
        g
    }

    #[test]
    fn edit_examples() {
        assert_eq!(plan_edit(&Graph::path(3)).ops, vec![EditOp::add(0, 2)]);
        let k4 = Graph::complete(4);
        let plan = plan_edit(&k4);
        assert_eq!(plan.ops, vec![EditOp::remove(0, 1), EditOp::remove(2, 3)]);
        let c4 = Graph::from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(apply_plan(&k4, &plan).unwrap(), c4);
        assert!(plan_edit(&Graph::complete(3)).ops.is_empty());
    }

    #[test]
    fn extend_examples() {
        assert_eq!(plan_extend(&Graph::path(3)).unwrap().ops, vec![EditOp::add(0, 2)]);

        let plan = plan_extend(&c6_chord()).unwrap();
        assert_eq!(plan.residual, vec![0, 2]);
        assert_eq!(plan.ops, vec![EditOp::add(0, 4), EditOp::add(2, 4)]);

        assert!(matches!(plan_extend(&Graph::complete(4)), Err(Error::NotExtendable(_))));
    }

    #[test]
    fn reduce_examples() {
        let k4 = Graph::complete(4);
        let plan = plan_reduce(&k4).unwrap();
        assert_eq!(plan.ops, vec![EditOp::remove(0, 1), EditOp::remove(2, 3)]);
        assert!(apply_plan(&k4, &plan).unwrap().is_eulerian());

        let plan = plan_reduce(&c6_chord()).unwrap();
        assert_eq!(plan.ops, vec![EditOp::remove(0, 2)]);
        assert_eq!(apply_plan(&c6_chord(), &plan).unwrap(), Graph::cycle(6));

        assert!(matches!(plan_reduce(&Graph::path(3)), Err(Error::NotReducible(_))));
    }

    #[test]
    fn modes_stay_pure() {
        let g = Graph::from_edges(7, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 5)]).unwrap();
        if let Ok(plan) = plan_extend(&g) {
            assert!(plan.ops.iter().all(|op| op.kind == EditKind::Add));
        }
        if let Ok(plan) = plan_reduce(&g) {
            assert!(plan.ops.iter().all(|op| op.kind == EditKind::Remove));
        }
    }
}
