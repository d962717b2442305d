use std::path::PathBuf;

use thiserror::Error;

use crate::circuit::EulerFailure;
use crate::editors::EditMode;

/// Errors produced by the graph, planning and oracle layers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not Eulerian: {0}")]
    NotEulerian(EulerFailure),

    #[error("graph cannot be made Eulerian by edge additions: {0}")]
    NotExtendable(String),

    #[error("graph cannot be made Eulerian by edge removals: {0}")]
    NotReducible(String),

    #[error("connectivity repair failed in {0} mode")]
    RepairFailed(EditMode),

    #[error("operation {index} ({op}) is not applicable: {reason}")]
    InapplicableOp {
        index: usize,
        op: String,
        reason: &'static str,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, err: impl std::fmt::Display) -> Self {
        Error::Io {
            path: path.into(),
            message: err.to_string(),
        }
    }

    /// True for results that mean "no Eulerian graph reachable", as opposed
    /// to malformed input or I/O trouble.
    pub fn is_infeasible(&self) -> bool {
        matches!(
            self,
            Error::NotEulerian(_)
                | Error::NotExtendable(_)
                | Error::NotReducible(_)
                | Error::RepairFailed(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
