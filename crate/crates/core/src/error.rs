use thiserror::Error;

/// Errors produced anywhere in the compilation pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("cannot normalize a zero vector")]
    ZeroVector,

    #[error("qubit index {index} out of range for width {width}")]
    QubitOutOfRange { index: usize, width: usize },

    #[error("qubit index {0} appears more than once in a gate")]
    DuplicateQubit(usize),

    #[error("width {0} is outside the supported range 1..=24")]
    WidthOutOfRange(usize),

    #[error("matrix is not orthogonal (max deviation {0:.3e})")]
    NotOrthogonal(f64),

    #[error("gate {position} is opaque and cannot be lowered")]
    NotLowerable { position: usize },

    #[error("synthesis failed: {0}")]
    Synthesis(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
