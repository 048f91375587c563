use thiserror::Error;

/// Errors raised by the library. Messages are stable; the CLI prints them verbatim.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown example: {0}")]
    UnknownExample(String),
    #[error("singular group element")]
    SingularGroupElement,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("j = {j} out of range 0..={max}")]
    FlatteningIndex { j: usize, max: usize },
    #[error("pfaffian form requires m=3 partially symmetric")]
    PfaffianFormShape,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("not skew-symmetric")]
    NotSkewSymmetric,
    #[error("{0} is not a prime below 2^62")]
    BadPrime(u64),
    #[error("size {size} out of range: {bound}")]
    SizeOutOfRange { size: usize, bound: String },
    #[error("polynomials have mixed degrees ({0} and {1})")]
    MixedDegrees(usize, usize),
    #[error("polynomials live in different coordinate systems")]
    CoordinateMismatch,
    #[error("partition sizes differ ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("degree {0} exceeds the character-table bound of 12")]
    CharacterTableBound(usize),
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("{0}")]
    Unsupported(String),
    #[error("tensor file: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
