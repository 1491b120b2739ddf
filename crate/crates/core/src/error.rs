use thiserror::Error;

use crate::poly::Var;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two polynomials in different variables were combined arithmetically.
    #[error("variable mismatch: cannot combine a polynomial in {left} with one in {right}")]
    VariableMismatch { left: Var, right: Var },

    /// An argument fell outside the supported range.
    #[error("{what} = {value} is out of range (expected {expected})")]
    OutOfRange {
        what: &'static str,
        value: u64,
        expected: String,
    },

    /// An enumeration would exceed its configured limit.
    #[error("resource bound exceeded for {what}: {requested} > limit {limit}")]
    ResourceBound {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    /// A caller-side precondition does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
