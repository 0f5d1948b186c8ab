//! Error type shared by all fallible operations in the crate.

/// Errors reported by table, closed-form, and certificate operations.
///
/// Total operations (the recurrence engine, the Q_k forms, polynomial
/// arithmetic) never return these; only operations with a documented
/// precondition do.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A row index exceeded the computed extent of a table.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// A documented precondition of the operation was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Parameters degenerate for the requested formula (a required
    /// parameter is zero, or a power base is nonpositive).
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),

    /// The zero polynomial has no root count or reality certificate.
    #[error("the zero polynomial has no root certificate")]
    ZeroPolynomial,

    /// A cross-check between two routes that must agree exactly failed.
    #[error("consistency check failed: {0}")]
    Consistency(String),
}
