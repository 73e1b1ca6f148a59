use thiserror::Error;

/// Errors raised by the algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two objects live in polynomial rings with different variable counts.
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    Dimension { expected: usize, found: usize },

    /// An operation is undefined on the given input (e.g. `min_var` of `1`).
    #[error("undefined input: {0}")]
    Undefined(String),

    /// Exact term arithmetic failed, e.g. a quotient without divisibility.
    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    /// The ideal does not satisfy the stability hypothesis an operation needs.
    #[error("stability violation: {0}")]
    Stability(String),

    /// A term expected to lie in an ideal does not.
    #[error("membership error: {0}")]
    Membership(String),

    /// The input is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An index argument is out of range.
    #[error("range error: {0}")]
    Range(String),

    /// A degree list or Hilbert function table failed validation.
    #[error("validation error: {0}")]
    Validation(String),

    /// The greedy almost revlex builder found no valid choice at this degree.
    #[error("no almost revlex ideal: expansion too small at degree {degree}")]
    NoAlmostRevlex { degree: usize },

    /// Text or JSON input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal consistency check failed. Indicates a bug.
    #[error("internal invariant failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
