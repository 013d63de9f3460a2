use thiserror::Error;

use crate::model::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An exact count left the 64-bit range.
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    /// The caller passed arguments outside an operation's domain.
    #[error("{0}")]
    Usage(String),

    /// A hypertournament violates its structural invariants.
    #[error("structurally invalid hypertournament: {}", join_violations(.0))]
    Structure(Vec<Violation>),

    /// A malformed instance file.
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    /// A transformation whose precondition does not hold for the input.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// A configured work budget would be exceeded.
    #[error("{what} needs {needed} units of work, budget is {budget} (set HYPERTOURNEY_BUDGET to raise it)")]
    Budget {
        what: &'static str,
        needed: String,
        budget: u64,
    },

    /// A construction step failed to produce what it guarantees.
    #[error("internal invariant failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
