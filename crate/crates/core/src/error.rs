use thiserror::Error;

use crate::rdf::{ColorSet, Violation};

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Parameters outside the domain of an operation.
    #[error("parameter domain: {0}")]
    Domain(String),

    /// Malformed textual input; `position` is either `line L, column C`
    /// or a field path such as `edges[3]`.
    #[error("parse error at {position}: {message}")]
    Parse { position: String, message: String },

    /// Structurally invalid input (length mismatches, bad members, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// An assignment that was required to be a valid rainbow dominating
    /// function is not one.
    #[error("contract violated: {reason}")]
    Contract {
        reason: String,
        violations: Vec<Violation>,
    },

    /// A search stopped before proving optimality.
    #[error("budget exhausted after {nodes} nodes: best weight {incumbent_weight}, proven lower bound {proven_lower}")]
    BudgetExhausted {
        incumbent_weight: u64,
        incumbent: Option<Vec<ColorSet>>,
        proven_lower: u64,
        nodes: u64,
    },

    /// The profile dynamic program declined to run.
    #[error("state-space estimate {estimate} exceeds budget {limit}")]
    Refused { estimate: u128, limit: u64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse_at(position: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            position: position.into(),
            message: message.into(),
        }
    }

    pub(crate) fn from_json(err: serde_json::Error) -> Self {
        Error::parse_at(format!("line {}, column {}", err.line(), err.column()), err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
