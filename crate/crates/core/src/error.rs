use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument fell outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature exhausted its evaluation budget before reaching
    /// the requested tolerance. Carries the best estimate so callers can
    /// degrade gracefully instead of discarding work.
    #[error(
        "quadrature did not converge ({context}): best estimate {value:e} ± {err_estimate:e} \
         after {evaluations} evaluations"
    )]
    QuadratureBudget {
        value: f64,
        err_estimate: f64,
        evaluations: u64,
        context: String,
    },

    /// Two grids that must share a `GridSpec` do not.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// More than the tolerated fraction of sweep cells failed to converge.
    #[error("sweep failed: {flagged} of {total} cells ({context}) exceeded the quadrature budget")]
    TooManyFlagged {
        flagged: usize,
        total: usize,
        context: String,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
