use thiserror::Error;

/// Everything that can go wrong while building or analysing graphs and mappings.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown edge `{0}`")]
    UnknownEdge(String),

    #[error("invalid ring spec: {0}")]
    InvalidRing(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("infinite ring {0} cannot be enumerated")]
    InfiniteRing(String),

    #[error("invalid mapping: {0}")]
    InvalidMapping(String),

    #[error("graph mismatch: {0}")]
    GraphMismatch(String),

    #[error("size budget exceeded: {0}")]
    Budget(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("format error: {0}")]
    Format(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}
