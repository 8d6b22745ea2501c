use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building or analysing a labeled cube subgraph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {n} exceeds the maximum of {max}")]
    DimensionTooLarge { n: u32, max: u32 },

    #[error("graph would have more than {limit} vertices")]
    SizeLimit { limit: usize },

    #[error("label {bits:#b} has bits set at or above dimension {n}")]
    LabelOutOfRange { bits: u64, n: u32 },

    #[error("duplicate vertex {label}")]
    DuplicateVertex { label: String },

    #[error("a graph needs at least one vertex")]
    EmptyGraph,

    #[error("generator set is empty")]
    EmptyGenerators,

    #[error("invalid bit string {text:?}: {reason}")]
    BadBitString { text: String, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("labeling is not an isometric embedding: {0}")]
    NotIsometric(String),

    /// A formula that only holds for downward-closed labelings was applied to one that is not.
    #[error("not a daisy-cube embedding: {0}")]
    NotDaisyEmbedding(String),

    #[error("index methods disagree: {0}")]
    MethodDisagreement(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("malformed JSON: {0}")]
    Json(String),
}

impl Error {
    /// True for errors caused by malformed or out-of-range input rather than
    /// by a property of a well-formed graph.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::Disconnected
                | Error::NotIsometric(_)
                | Error::NotDaisyEmbedding(_)
                | Error::MethodDisagreement(_)
                | Error::Overflow(_)
        )
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}
