use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("label `{label}` occurs {count} time(s); every label must occur exactly twice")]
    LabelNotTwice { label: String, count: usize },

    #[error("malformed token `{0}`")]
    EmptyToken(String),

    #[error("{what} {n} exceeds the configured bound {max}")]
    BoundExceeded { what: &'static str, n: usize, max: usize },

    #[error("word `{0}` is not realizable as a spherical curve")]
    NotRealizable(String),

    #[error("3h - 3tr + cross = {0} is not divisible by 4")]
    NonIntegral(i64),

    #[error("embedding belongs to `{embedding}`, not to `{word}`")]
    EmbeddingMismatch { word: String, embedding: String },

    #[error("invalid site: {0}")]
    SiteInvalid(String),

    #[error("postcondition violated: {0}")]
    PostconditionViolation(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable name, shared with the CLI and the C ABI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::LabelNotTwice { .. } => "LABEL_NOT_TWICE",
            Error::EmptyToken(_) => "EMPTY_TOKEN",
            Error::BoundExceeded { .. } => "BOUND_EXCEEDED",
            Error::NotRealizable(_) => "NOT_REALIZABLE",
            Error::NonIntegral(_) => "NON_INTEGRAL",
            Error::EmbeddingMismatch { .. } => "EMBEDDING_MISMATCH",
            Error::SiteInvalid(_) => "SITE_INVALID",
            Error::PostconditionViolation(_) => "POSTCONDITION_VIOLATION",
            Error::Io(_) => "IO",
        }
    }
}
