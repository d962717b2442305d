//! Converting graphs into Eulerian graphs by edge toggles.
//!
//! Three strategies are provided: mixed edits ([`plan_edit`]), additions
//! only ([`plan_extend`]) and removals only ([`plan_reduce`]). Each planner
//! fixes vertex parities; [`eulerize`] then restores connectivity where the
//! mode allows it and checks the result.

mod planners;
mod repair;
mod search;

use std::fmt;
use std::str::FromStr;

pub use planners::{plan_edit, plan_extend, plan_reduce};
pub use search::MAX_SEARCH_ADDITIONS;

use crate::circuit::EulerCondition;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

/// Which toggles a plan may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EditMode {
    /// Additions and removals.
    Edit,
    /// Additions only.
    Extend,
    /// Removals only.
    Reduce,
}

impl EditMode {
    pub const ALL: [EditMode; 3] = [EditMode::Edit, EditMode::Extend, EditMode::Reduce];

    pub fn name(self) -> &'static str {
        match self {
            EditMode::Edit => "edit",
            EditMode::Extend => "extend",
            EditMode::Reduce => "reduce",
        }
    }

    pub fn allows(self, kind: EditKind) -> bool {
        match self {
            EditMode::Edit => true,
            EditMode::Extend => kind == EditKind::Add,
            EditMode::Reduce => kind == EditKind::Remove,
        }
    }
}

impl fmt::Display for EditMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EditMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edit" => Ok(EditMode::Edit),
            "extend" => Ok(EditMode::Extend),
            "reduce" => Ok(EditMode::Reduce),
            other => Err(Error::invalid(format!(
                "unknown mode {other:?}, expected edit, extend or reduce"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EditKind {
    Add,
    Remove,
}

impl EditKind {
    pub fn inverse(self) -> Self {
        match self {
            EditKind::Add => EditKind::Remove,
            EditKind::Remove => EditKind::Add,
        }
    }
}

/// A single edge toggle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EditOp {
    pub kind: EditKind,
    pub edge: Edge,
}

impl EditOp {
    pub fn add(u: Vertex, v: Vertex) -> Self {
        EditOp {
            kind: EditKind::Add,
            edge: Edge::new(u, v),
        }
    }

    pub fn remove(u: Vertex, v: Vertex) -> Self {
        EditOp {
            kind: EditKind::Remove,
            edge: Edge::new(u, v),
        }
    }

    pub fn inverse(self) -> Self {
        EditOp {
            kind: self.kind.inverse(),
            edge: self.edge,
        }
    }

    /// The toggle that flips `{u, v}` in `g`.
    pub fn toggle_in(g: &Graph, u: Vertex, v: Vertex) -> Self {
        if g.has_edge(u, v) {
            EditOp::remove(u, v)
        } else {
            EditOp::add(u, v)
        }
    }

    /// Applies the op, checking its precondition.
    pub fn apply_to(&self, g: &mut Graph) -> std::result::Result<(), &'static str> {
        let (u, v) = self.edge.endpoints();
        if v >= g.n() {
            return Err("endpoint out of range");
        }
        match self.kind {
            EditKind::Add if !g.insert_edge(u, v) => Err("edge already present"),
            EditKind::Remove if !g.remove_edge(u, v) => Err("edge not present"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for EditOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = match self.kind {
            EditKind::Add => "ADD",
            EditKind::Remove => "DEL",
        };
        write!(f, "{word} {} {}", self.edge.u(), self.edge.v())
    }
}

/// An ordered list of toggles together with how it was built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditPlan {
    pub mode: EditMode,
    pub ops: Vec<EditOp>,
    /// Half the odd-vertex count of the input graph.
    pub lower_bound: usize,
    /// Trailing ops appended by connectivity repair.
    pub repair_ops: usize,
    /// Odd-vertex pairs resolved by the planner, in resolution order.
    pub pairing: Vec<(Vertex, Vertex)>,
    /// Odd vertices left after greedy pairing (a clique for extension, an
    /// independent set up to bridge edges for reduction).
    pub residual: Vec<Vertex>,
}

impl EditPlan {
    pub fn empty(mode: EditMode, g: &Graph) -> Self {
        EditPlan {
            mode,
            ops: Vec::new(),
            lower_bound: parity_lower_bound(g),
            repair_ops: 0,
            pairing: Vec::new(),
            residual: Vec::new(),
        }
    }

    /// Wraps externally supplied ops, e.g. a plan file, for replay against
    /// `g`. The mode is the narrowest one admitting every op.
    pub fn replay(g: &Graph, ops: Vec<EditOp>) -> Self {
        let mode = if ops.is_empty() {
            EditMode::Edit
        } else if ops.iter().all(|op| op.kind == EditKind::Add) {
            EditMode::Extend
        } else if ops.iter().all(|op| op.kind == EditKind::Remove) {
            EditMode::Reduce
        } else {
            EditMode::Edit
        };
        EditPlan {
            ops,
            ..EditPlan::empty(mode, g)
        }
    }

    pub fn achieved(&self) -> usize {
        self.ops.len()
    }
}

/// `T / 2`: every toggle changes the parity of exactly two vertices.
pub fn parity_lower_bound(g: &Graph) -> usize {
    g.odd_count() / 2
}

/// Applies `ops` in order to a copy of `g`.
pub fn apply_ops(g: &Graph, ops: &[EditOp]) -> Result<Graph> {
    let mut out = g.clone();
    for (index, op) in ops.iter().enumerate() {
        op.apply_to(&mut out).map_err(|reason| Error::InapplicableOp {
            index,
            op: op.to_string(),
            reason,
        })?;
    }
    Ok(out)
}

pub fn apply_plan(g: &Graph, plan: &EditPlan) -> Result<Graph> {
    apply_ops(g, &plan.ops)
}

/// Outcome of replaying a plan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub eulerian: bool,
    pub failed_condition: Option<EulerCondition>,
    /// Odd-vertex count of the resulting graph.
    pub final_t: usize,
}

pub fn verify_plan(g: &Graph, plan: &EditPlan) -> Result<VerifyReport> {
    let result = apply_plan(g, plan)?;
    let check = result.eulerian_check();
    Ok(VerifyReport {
        eulerian: check.is_ok(),
        failed_condition: check.err().map(|f| f.condition()),
        final_t: result.odd_count(),
    })
}

/// Whether every pair of a mixed-edit plan has a common neighbor once the
/// parity toggles are applied. When this holds for a connected input, the
/// toggled graph stays connected and no repair is needed.
pub fn pairing_witnessed(g: &Graph, plan: &EditPlan) -> bool {
    let parity_ops = &plan.ops[..plan.ops.len() - plan.repair_ops];
    let Ok(toggled) = apply_ops(g, parity_ops) else {
        return false;
    };
    plan.pairing
        .iter()
        .all(|&(u, v)| toggled.has_common_neighbor(u, v))
}

/// Plans in `mode`, repairs connectivity where the mode permits, and returns
/// the resulting Eulerian graph with the full plan.
///
/// If the greedy extension fails and the complement has at most
/// [`MAX_SEARCH_ADDITIONS`] edges, a minimum addition set is searched for
/// exhaustively, so an extension failure on such graphs is definitive.
pub fn eulerize(g: &Graph, mode: EditMode) -> Result<(Graph, EditPlan)> {
    if g.is_eulerian() {
        return Ok((g.clone(), EditPlan::empty(mode, g)));
    }
    match greedy(g, mode) {
        Err(Error::NotExtendable(reason)) => match search::min_additions(g) {
            Some(Some(ops)) => {
                let plan = EditPlan {
                    ops,
                    ..EditPlan::empty(mode, g)
                };
                Ok((apply_plan(g, &plan)?, plan))
            }
            Some(None) => Err(Error::NotExtendable(format!(
                "no set of additions makes the graph Eulerian ({reason})"
            ))),
            None => Err(Error::NotExtendable(reason)),
        },
        other => other,
    }
}

fn greedy(g: &Graph, mode: EditMode) -> Result<(Graph, EditPlan)> {
    let (mut plan, mut work) = match mode {
        EditMode::Edit => {
            let plan = plan_edit(g);
            let work = apply_plan(g, &plan)?;
            (plan, work)
        }
        EditMode::Extend => {
            let plan = plan_extend(g)?;
            let work = apply_plan(g, &plan)?;
            (plan, work)
        }
        EditMode::Reduce => {
            if g.n() < 3 || g.m() == 0 {
                return Err(Error::NotReducible(format!(
                    "graph with n = {} and m = {} has no Eulerian subgraph",
                    g.n(),
                    g.m()
                )));
            }
            if !g.is_connected() {
                return Err(Error::NotReducible(
                    "input is disconnected and removals cannot reconnect it".into(),
                ));
            }
            let plan = plan_reduce(g)?;
            let work = apply_plan(g, &plan)?;
            (plan, work)
        }
    };

    let before = plan.ops.len();
    match mode {
        EditMode::Edit => repair::connect_with_toggles(&mut work, &mut plan.ops)?,
        EditMode::Extend => repair::connect_with_additions(&mut work, &mut plan.ops)?,
        EditMode::Reduce => {}
    }
    plan.repair_ops = plan.ops.len() - before;

    match work.eulerian_check() {
        Ok(()) => Ok((work, plan)),
        Err(failure) => Err(match mode {
            EditMode::Reduce => Error::NotReducible(failure.to_string()),
            EditMode::Extend => Error::NotExtendable(failure.to_string()),
            EditMode::Edit => Error::RepairFailed(mode),
        }),
    }
}
