use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("vertex index {index} out of range for a {k}-gon")]
    VertexIndex { index: usize, k: usize },
    #[error("point is not strictly outside the polygon: {0}")]
    NotOutside(String),
    #[error("coincident points")]
    CoincidentPoints,
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("invalid point set: {0}")]
    InvalidPointSet(String),
    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("{got} points exceeds the reference bound of {limit}")]
    TooManyPoints { got: usize, limit: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("empty line set")]
    NoLines,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
