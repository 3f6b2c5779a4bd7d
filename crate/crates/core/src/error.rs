use thiserror::Error;

use crate::gallery::LoadError;
use crate::tokenizer::LexError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown notation `{0}`")]
    UnknownNotation(String),

    #[error("unknown example `{0}`")]
    UnknownExample(String),

    #[error("unknown metric `{0}`")]
    UnknownMetric(String),

    #[error("unknown tokenizer `{0}`")]
    UnknownTokenizer(String),

    #[error("degenerate gallery: needs at least 2 examples, found {0}")]
    DegenerateGallery(usize),

    #[error("compressor unavailable: {0}")]
    CompressorUnavailable(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("dendrogram height decreases at merge {step}: {height} < {previous}")]
    NonMonotoneDendrogram {
        step: usize,
        height: f64,
        previous: f64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("pair ({i}, {j}): {source}")]
    Pair {
        i: usize,
        j: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Lex(#[from] LexError),

    #[error(transparent)]
    Load(#[from] LoadError),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures of the environment (filesystem, sockets) rather
    /// than of the gallery or the request.
    pub fn is_environmental(&self) -> bool {
        match self {
            Error::Io(_) => true,
            Error::Load(e) => e.is_environmental(),
            Error::Pair { source, .. } => source.is_environmental(),
            _ => false,
        }
    }
}
