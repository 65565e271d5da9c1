//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors reported by semigroup construction and queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The generator list was empty.
    #[error("generator list is empty")]
    EmptyInput,

    /// The generators do not generate all of Z, so the complement of the
    /// semigroup in N is infinite.
    #[error("generators have gcd {gcd}, expected 1")]
    NonCoprime { gcd: i64 },

    /// A generator was zero or negative.
    #[error("generators must be positive, got {value}")]
    NonPositive { value: i64 },

    /// The requested Apéry base is not a nonzero element of the semigroup.
    #[error("{value} is not a nonzero element of the semigroup")]
    NotMember { value: i64 },

    /// A family parameter violated one of its constraints. The message names
    /// the first violated constraint in a fixed check order.
    #[error("{0}")]
    InvalidParams(&'static str),
}
