use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("bilinear map is not symmetric in its arguments")]
    NotSymmetric,
    #[error("bilinear map is not skew-symmetric in its arguments")]
    NotSkew,
    #[error("jet base point does not match the value it is composed with")]
    CompositionDomain,
    #[error("not a frame: {0}")]
    NotAFrame(String),
    #[error("group mismatch: expected {expected}, got {got}")]
    GroupMismatch { expected: String, got: String },
    #[error("kind mismatch: expected {expected}, got {got}")]
    KindMismatch { expected: String, got: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
