use alloc::string::String;

/// Errors raised by the structure computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("invalid structure constants: {0}")]
    InvalidAlgebra(String),
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,
    #[error("algebra is not a Lie algebra")]
    NotLie,
    #[error("algebra is not solvable")]
    NotSolvable,
    #[error("left multiplications are not nilpotent: {0}")]
    NotEngelNilpotent(String),
    #[error("a required eigenvalue is not rational")]
    NotSplitOverField,
    #[error("splitting system is inconsistent: {0}")]
    SplittingFailed(String),
    #[error("nilradical verification failed: {0}")]
    NilradicalUnverified(String),
    #[error("chain of subspaces is not a complete flag: {0}")]
    InvalidFlag(String),
    #[error("dimension {0} is outside the classified range")]
    DimensionOutOfRange(usize),
    #[error("no canonical algebra matches: {0}")]
    NoMatch(String),
    #[error("invalid bimodule: {0}")]
    InvalidBimodule(String),
}

pub type Result<T> = core::result::Result<T, Error>;
