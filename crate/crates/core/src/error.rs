use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A caller broke an operation's precondition (length mismatch,
    /// non-finite sample, mis-sized profile, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Input is well-formed but outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("center collision: boundary sample {index} coincides with the interior center")]
    CenterCollision { index: usize },

    #[error("degenerate tangent: zero derivative at boundary sample {index}")]
    DegenerateTangent { index: usize },

    #[error("non-simple or mis-oriented curve: {0}")]
    NonSimpleCurve(String),

    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("iteration {iteration}: {source}")]
    AtIteration {
        iteration: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
