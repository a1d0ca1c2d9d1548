//! Error types shared across the crate.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by numerics, model construction, and training.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {detail}")]
    ShapeMismatch { op: &'static str, detail: String },

    #[error("non-finite value produced by {context}")]
    NonFinite { context: String },

    #[error("unknown parameter '{0}'")]
    UnknownParam(String),

    #[error("parameter '{0}' already registered")]
    DuplicateParam(String),

    #[error("backward requires a scalar loss, got shape {0:?}")]
    NonScalarLoss(Vec<usize>),

    #[error("non-finite gradient for parameter '{0}'")]
    NonFiniteGradient(String),

    #[error("actnorm layer used before initialization (block {0})")]
    ActnormUninitialized(usize),

    #[error("index array is not a permutation of 0..{0}")]
    InvalidPermutation(usize),

    #[error("degenerate world: {0}")]
    DegenerateWorld(String),

    #[error("training diverged at step {step}: {detail}")]
    Diverged { step: usize, detail: String },

    #[error("layer index {index} out of range (depth {depth})")]
    LayerIndexOutOfRange { index: usize, depth: usize },

    #[error("dequantizer used before training")]
    DequantizerUntrained,

    #[error("zero-variance column {index} in {what}")]
    ZeroVariance { what: &'static str, index: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
