use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("empty corpus")]
    EmptyCorpus,
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("requested vocabulary size {requested} is below the {base} base symbols")]
    VocabTooSmall { requested: usize, base: usize },
    #[error("token id {0} is not in the vocabulary")]
    UnknownTokenId(u32),
    #[error("character {0:?} is outside the tokenizer alphabet")]
    UnknownSymbol(char),
    #[error("malformed model file: {0}")]
    Model(String),
    #[error("feature schema mismatch: model expects {expected}, got {found}")]
    SchemaMismatch { expected: String, found: String },
    #[error("conflicting values for score dimension {dimension} on candidate {text:?}")]
    ScoreConflict { dimension: String, text: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
