use thiserror::Error;

/// Errors produced by the scoring, ingest, metrics, and projection layers.
///
/// Transport-level failures of the generation backend live in
/// [`crate::generator::TransportError`]; they are kept separate so callers
/// can distinguish data problems from backend problems.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{factor} out of range: {value}")]
    OutOfRange { factor: &'static str, value: f64 },

    #[error("answer {value} outside Likert range 1..=5")]
    LikertRange { value: i64 },

    #[error("cosine similarity is undefined for a zero-magnitude vector")]
    ZeroVector,

    #[error("profile table is empty")]
    EmptyTable,

    #[error("group is empty")]
    EmptyGroup,

    #[error("group needs at least 2 responses, found {0}")]
    GroupTooSmall(usize),

    #[error("expected {expected} {what}, found {found}")]
    Cardinality {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("{context}: {message}")]
    Parse { context: String, message: String },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("incomplete record at row {row}; cannot evaluate")]
    IncompleteRecord { row: usize },

    #[error("stratified sampling deficit: {0}")]
    SampleDeficit(String),

    #[error("regularized within-class scatter is not positive definite; increase shrinkage_lambda")]
    NotPositiveDefinite,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("config: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            context: context.into(),
            message: message.into(),
        }
    }
}
