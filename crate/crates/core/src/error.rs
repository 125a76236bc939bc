use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("cannot pad partition of size {size} with first part {first} to n = {n}; need n >= {}", size + first)]
    PadTooSmall { size: u32, first: u32, n: u32 },

    #[error("series has no multiplicative inverse: constant term is not a unit")]
    NonUnit,

    #[error("partition length {len} exceeds supported bound {max}")]
    LengthBound { len: usize, max: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("zero polynomial has no graded degree")]
    ZeroPolynomial,

    #[error("computation infeasible: {0}")]
    Infeasible(String),

    /// A result that must be a nonnegative integer by theory was not.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
