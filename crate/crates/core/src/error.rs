use crate::qaoa::OptTrace;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid or infeasible parameters (e.g. a random-regular graph with
    /// `n * d` odd, or mismatched gamma/beta lengths).
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Input exceeds an enumeration or simulation capacity bound.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Inconsistent data (duplicate ids, malformed files, dimension mismatch).
    #[error("validation failed: {0}")]
    Validation(String),

    /// The optimizer or a network forward pass produced a non-finite value.
    /// Carries the trace accumulated up to the failure when available.
    #[error("numerical failure: {message}")]
    Numerical {
        message: String,
        trace: Option<Box<OptTrace>>,
    },

    /// A pipeline stage failed; the stage name is attached for diagnosis.
    #[error("stage '{stage}' failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(String),
}

impl Error {
    pub fn numerical(message: impl Into<String>) -> Self {
        Error::Numerical {
            message: message.into(),
            trace: None,
        }
    }

    pub fn in_stage(stage: &'static str) -> impl FnOnce(Error) -> Error {
        move |source| Error::Stage {
            stage,
            source: Box::new(source),
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serde(e.to_string())
    }
}

impl From<toml::de::Error> for Error {
    fn from(e: toml::de::Error) -> Self {
        Error::Serde(e.to_string())
    }
}
