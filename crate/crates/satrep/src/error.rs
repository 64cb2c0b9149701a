//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polytope is empty")]
    EmptyPolytope,
    #[error("polytope is unbounded in coordinate {0}")]
    Unbounded(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("residue class {residue} mod {period} has {got} samples, needs {need}")]
    InsufficientSamples {
        residue: usize,
        period: usize,
        got: usize,
        need: usize,
    },
    #[error("samples are not consistent with period {period}, degree {degree}")]
    InconsistentSamples { period: usize, degree: usize },
    #[error("no shift up to {0} produces the required property")]
    CapExceeded(usize),
    #[error("partition sizes disagree: {0} vs {1}")]
    SizeMismatch(u64, u64),
    #[error("input size {got} exceeds the cost guard {guard}")]
    SizeGuardExceeded { got: u64, guard: u64 },
    #[error("partition height {got} exceeds the allowed bound {bound}")]
    HeightViolation { got: usize, bound: usize },
    #[error("partition height {got} exceeds the rank {rank}")]
    HeightExceedsRank { got: usize, rank: usize },
    #[error("unsupported embedding: {0}")]
    UnsupportedEmbedding(String),
    #[error("relaxation parameter {c} must exceed the supplied index estimate {estimate}")]
    RelaxationTooSmall { c: u64, estimate: u64 },
    #[error("affine span transformed to an inconsistent system (internal error)")]
    InconsistentSpan,
    #[error("horizon {got} too small: need at least {need} samples")]
    InsufficientHorizon { got: usize, need: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
