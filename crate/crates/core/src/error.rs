use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series constant term is not invertible in the coefficient ring")]
    NonUnitConstantTerm,

    #[error("composition needs inner(0) = 0 or a polynomial outer function")]
    IllFormedComposition,

    #[error("expected an integral result, got {0}")]
    NonIntegralResult(String),

    #[error("r must be nonzero")]
    ZeroR,

    #[error("closed form for i0 fails 24*i0 = -1 (mod {0})")]
    InconsistentI0(u64),

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("{m} is not in T*({p},{r},{s})")]
    NotInTStar { p: u64, r: i64, s: u64, m: u64 },

    #[error("relation space needs at least one row")]
    InsufficientData,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
