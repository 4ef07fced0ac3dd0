//! Error type shared by every layer of the toolkit.
//!
//! The variants are coarse on purpose: callers mostly need to distinguish
//! "bad input" (parse / validation), "resource limit hit" (budget) and
//! "sampling could not produce a usable point" — everything else is a plain
//! computation error.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Text did not conform to the polynomial grammar. `position` is a byte
    /// offset into the offending string.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// Operands live in different rings (variables, field or block structure
    /// differ).
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    /// A Groebner run exceeded its explicit budget. Both counters report the
    /// state at abort time.
    #[error("budget exceeded: {pairs} S-pairs processed, degree reached {degree} (limits: {max_pairs} pairs, degree {max_degree})")]
    BudgetExceeded {
        pairs: u64,
        degree: u64,
        max_pairs: u64,
        max_degree: u64,
    },

    /// An operation that requires graded input received a non-homogeneous
    /// polynomial.
    #[error("non-homogeneous input: {0}")]
    NonHomogeneous(String),

    /// The quotient ring is zero (the ideal contains a unit), so dimension
    /// and multiplicity are undefined.
    #[error("unit ideal: {0}")]
    UnitIdeal(String),

    /// Random sampling failed to produce a usable point, or every sampled
    /// fiber was degenerate (e.g. the map is not generically finite).
    #[error("sampling failed: {0}")]
    Sampling(String),

    /// Structurally invalid input (wrong degrees, zero forms, bad options…).
    #[error("invalid input: {0}")]
    Invalid(String),

    /// Division by zero in the coefficient field.
    #[error("division by zero in the coefficient field")]
    DivisionByZero,

    /// An error from a pipeline component, labeled with the stage that
    /// produced it. The underlying variant stays reachable via [`Error::root`].
    #[error("{stage}: {source}")]
    Stage {
        stage: String,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    /// Wraps an error with a pipeline-stage label.
    pub fn staged(stage: impl Into<String>, source: Error) -> Self {
        Error::Stage {
            stage: stage.into(),
            source: Box::new(source),
        }
    }

    /// The innermost error, with every stage label peeled off.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            other => other,
        }
    }
}
