//! Crate-wide error type for construction and parsing faults.
//!
//! Search give-ups are not errors; they are [`crate::search::Outcome::Undecided`].

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed graph6 / cg6 input. `offset` is the byte position within the line.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    /// An argument outside a builder's documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Input graph fails an operation's precondition (e.g. χ(H) ≠ 3).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A sub-decision exhausted its budget, so the caller's answer is unknown.
    #[error("undecided: {0}")]
    Undecided(String),

    /// A sampled Borsuk–Hajnal surrogate violated a finitely checkable bullet.
    #[error("surrogate rejected: bullet violated: {0}")]
    BulletViolation(String),

    /// A plugged slot graph does not meet the declared girth/order requirements.
    #[error("slot violation: {0}")]
    SlotViolation(String),
}

impl Error {
    pub fn parse(offset: usize, reason: impl Into<String>) -> Self {
        Error::Parse { offset, reason: reason.into() }
    }
}
