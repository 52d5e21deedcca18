use thiserror::Error;

/// Errors surfaced by the public operations.
///
/// Internal invariant violations (a decomposition that fails its own
/// re-verification, an idempotent that refuses to split) are panics, not
/// errors: they cannot happen for valid inputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("ambient rank mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("backend mismatch: {0}")]
    BackendMismatch(String),

    #[error("morphism is not idempotent")]
    NotIdempotent,

    #[error("quiver is not acyclic: cycle through vertices {0:?}")]
    QuiverCycle(Vec<String>),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("complex fails d^2 = 0 first at degree {0}")]
    DifferentialSquare(i64),

    #[error("chain map does not commute with differentials at degree {0}")]
    NotChainMap(i64),

    #[error("generators are not negative: witness ({0}, {1}, shift {2})")]
    NotNegative(usize, usize, i64),

    #[error("lift system inconsistent (inputs were not pre-weight decompositions)")]
    LiftInconsistent,

    #[error("(retraction, section) is not a splitting")]
    NotASplitting,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("json: {0}")]
    Json(String),
}
