use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("triple ({a}, {b}, {c}) is not admissible")]
    Admissibility { a: i64, b: i64, c: i64 },

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("{what} exceeds limit: {actual} > {limit}")]
    Capacity {
        what: String,
        limit: usize,
        actual: usize,
    },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Admissibility { .. } => "admissibility",
            Error::Internal(_) => "internal",
            Error::Argument(_) => "argument",
            Error::Structural(_) => "structural",
            Error::Capacity { .. } => "capacity",
            Error::Hypothesis(_) => "hypothesis",
            Error::Parse(_) => "parse",
            Error::Json(_) => "json",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
