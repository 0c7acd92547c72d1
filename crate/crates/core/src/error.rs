use thiserror::Error;

/// Errors raised by every layer of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("refusing a graph on {n} vertices: the cap is {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("invalid modulator: {0}")]
    InvalidModulator(String),

    #[error("invalid host: {0}")]
    InvalidHost(String),

    #[error("rule not applicable: {0}")]
    Inapplicable(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("extraction failed at {step}: {detail}")]
    Extraction { step: String, detail: String },

    #[error("internal bug: {0}")]
    InternalBug(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
