use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot build a language model from an empty corpus")]
    EmptyCorpus,

    #[error("invalid sentence: {0}")]
    InvalidSentence(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{0}: not a {1} file")]
    BadMagic(PathBuf, &'static str),

    #[error("corrupt {kind} file: {message}")]
    Corrupt { kind: &'static str, message: String },

    #[error("cosine similarity is undefined for a zero-norm vector")]
    ZeroNorm,

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("no cached embedding for model {model:?} and sentence {sentence:?}")]
    MissingEmbedding { model: String, sentence: String },

    #[error("provider error: {0}")]
    Provider(String),

    #[error("record {index}: {source}")]
    Record {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(path: impl Into<PathBuf>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            message: message.into(),
        }
    }

    /// True for errors raised by an external provider (thesaurus or
    /// sentence-embedding endpoint) rather than by local data.
    pub fn is_provider(&self) -> bool {
        matches!(self, Error::Provider(_) | Error::MissingEmbedding { .. })
    }
}
