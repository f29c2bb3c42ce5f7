use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("data length {got} does not match shape (expected {expected})")]
    InvalidData { expected: usize, got: usize },

    #[error("non-finite entry at index {index}")]
    NonFinite { index: usize },

    #[error("{what} did not converge after {iterations} iterations")]
    Convergence { what: &'static str, iterations: usize },

    #[error("matrix has rank {rank} but {required} is required")]
    RankDeficient { rank: usize, required: usize },

    #[error("{0} is singular")]
    Singular(&'static str),

    #[error("bridge product is ill-conditioned (condition estimate {condition:e})")]
    BridgeDegenerate { condition: f64 },

    #[error("matrix is not orthogonal (deviation {deviation:e})")]
    NotOrthogonal { deviation: f64 },

    #[error("element is not invertible in the group (residual {residual:e})")]
    NotInvertible { residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
