use thiserror::Error;

/// Errors raised by the combinatorial and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid Dyck path: {0}")]
    InvalidDyckPath(String),
    #[error("invalid Hessenberg function: {0}")]
    InvalidHessenberg(String),
    #[error("invalid area sequence: {0}")]
    InvalidAreaSequence(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("invalid board: {0}")]
    InvalidBoard(String),
    #[error("invalid part listing: {0}")]
    InvalidListing(String),
    #[error("vertices {0}..{1} do not induce a clique")]
    CoBipartiteViolation(usize, usize),
    #[error("part {0} of the listing is not a bicolored graph")]
    NotABicoPart(usize),
    #[error("poset is not a unit interval order")]
    NotUnitIntervalOrder,
    #[error("internal search failure: {0}")]
    InternalSearchFailure(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix entries must be 0 or 1")]
    NotZeroOne,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("negative coefficient at {0}")]
    NegativeCoefficient(String),
    #[error("coefficient of {0} is not an integer")]
    NotIntegral(String),
    #[error("degree {0} is below 2")]
    DegreeTooSmall(usize),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
