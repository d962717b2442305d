//! Turning simple graphs into Eulerian graphs with few edge edits.
//!
//! The crate covers three planners (mixed edits, additions only, removals
//! only), a seeded `G(n, p)` sampler with closed-form parity statistics,
//! exact small-graph oracles, and a Monte Carlo harness that measures how
//! the edit numbers of random graphs concentrate around `n / 4`.
//!
//! ```
//! use euledit_core::{eulerize, EditMode, Graph};
//!
//! let path = Graph::path(3);
//! let (triangle, plan) = eulerize(&path, EditMode::Edit).unwrap();
//! assert!(triangle.is_eulerian());
//! assert_eq!(plan.achieved(), 1);
//! ```

pub mod circuit;
pub mod editors;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod sampler;

pub use circuit::{EulerCircuit, EulerCondition, EulerFailure};
pub use editors::{
    apply_ops, apply_plan, eulerize, parity_lower_bound, plan_edit, plan_extend, plan_reduce,
    verify_plan, EditKind, EditMode, EditOp, EditPlan, VerifyReport,
};
pub use error::{Error, Result};
pub use experiments::{ExperimentKind, ExperimentReport};
pub use graph::{Edge, Graph, Vertex};
pub use oracle::{OracleResult, OracleValue};
pub use sampler::{classify_p, epsilon_b, odd_degree_prob, sample_gnp, ProbabilityWindow, Seed};
