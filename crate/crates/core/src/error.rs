use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("singular system")]
    SingularSystem,
    #[error("division by zero")]
    ZeroDenominator,
    #[error("cannot specialize at q = 0")]
    ZeroSpecialization,
    #[error("odd powers of v need a square root v0 with v0^2 = q0")]
    MissingSquareRoot,
    #[error("negative power of a non-unit")]
    NotAUnit,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("partition {inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("invalid basis index: {0}")]
    InvalidIndex(String),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("not in the Schur span (nonzero remainder)")]
    NotInSchurSpan,
    #[error("internal check failed: {0}")]
    Defect(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
