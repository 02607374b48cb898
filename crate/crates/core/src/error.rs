use thiserror::Error;

use crate::linalg::Int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("linear system is singular")]
    Singular,

    #[error("normal vector is zero")]
    DegenerateNormal,

    #[error("normal vector is not primitive (gcd {0})")]
    NonPrimitive(Int),

    #[error("no input points")]
    Empty,

    #[error("points affinely span only dimension {found} of {dim}")]
    LowerDimensional { dim: usize, found: usize },

    #[error("dilation factor must be at least 1")]
    DegenerateDilate,

    #[error("dilation series covers k = 1..{have}, need k = 1..{need}")]
    InsufficientSeries { have: usize, need: usize },

    #[error("unsupported dimension {dim}: {reason}")]
    UnsupportedDimension { dim: usize, reason: &'static str },

    #[error("half-space does not support a facet of the polytope")]
    NotAFacet,

    #[error("origin is not in the interior of the polytope")]
    OriginNotInterior,

    #[error("polytope is not Fano")]
    NotFano,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
