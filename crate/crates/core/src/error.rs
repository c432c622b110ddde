use thiserror::Error;

/// Errors reported by the library. Internal invariant failures (for example a
/// Wronskian that does not divide exactly) are panics, not variants here.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum WhpError {
    #[error("invalid partition token `{token}`: {reason}")]
    InvalidPartition { token: String, reason: String },

    #[error("partition {inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },

    #[error("{target} cannot be reached from {source_partition} by removing {p}-strips")]
    Unreachable {
        source_partition: String,
        target: String,
        p: usize,
    },

    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(String),

    #[error("duplicate entry {0}")]
    DuplicateEntry(String),

    #[error("parameter collision: degree {degree} equals shifted degree {shifted}")]
    ParameterCollision { degree: String, shifted: String },

    #[error("method `{method}` is not supported for {mode}")]
    UnsupportedMethod { method: String, mode: String },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("root finder did not converge after {iterations} iterations")]
    NonConvergence {
        iterations: usize,
        /// Best approximations at the time of giving up, as (re, im).
        partial: Vec<(f64, f64)>,
    },
}

pub type Result<T> = std::result::Result<T, WhpError>;
