use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("frame index {0} out of range 1..=3")]
    BadIndex(usize),
    #[error("bracket [e{0},e{1}] given more than once")]
    DuplicateBracket(usize, usize),
    #[error("structure constants violate the Jacobi identity at (e{0},e{1},e{2})")]
    JacobiViolation(usize, usize, usize),
    #[error("metric is not symmetric positive definite")]
    MetricNotSpd,
    #[error("invalid contraction slots ({0}, {1}) for a rank-{2} tensor")]
    BadSlot(usize, usize, usize),
    #[error("expected a tensor of valence {expected}, got {found}")]
    BadValence { expected: String, found: String },
    #[error("tensor is not symmetric")]
    NotSymmetric,
    #[error("vectors span a degenerate plane")]
    DegeneratePlane,
    #[error("malformed rational {0:?}")]
    RationalFormat(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
