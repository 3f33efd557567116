//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("bound exceeded for {what}: {got} > {limit}")]
    BoundExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division: {0}")]
    DivisionError(String),
    #[error("spectrum outside the allowed root-of-unity set: {0}")]
    SpectrumError(String),
    #[error("singular matrix: {0}")]
    SingularError(String),
    #[error("partition is not e-restricted: {0}")]
    NotRestricted(String),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("iteration cap hit, refusing to continue: {0}")]
    NonTermination(String),
    #[error("algorithm invariant violated: {0}")]
    AlgorithmInvariant(String),
    #[error("rank defect: {0}")]
    RankError(String),
    #[error("claimed basis is linearly dependent: {0}")]
    BasisError(String),
    #[error("homogeneity violated: {0}")]
    HomogeneityError(String),
    #[error("combinatorial and matrix data disagree: {0}")]
    MismatchError(String),
    #[error("radical is not a graded subspace: {0}")]
    GradednessError(String),
    #[error("triangular character system is inconsistent: {0}")]
    SolveError(String),
    #[error("e = 2 is not supported by the graded presentation")]
    E2Unsupported,
}

pub type Result<T> = std::result::Result<T, Error>;
