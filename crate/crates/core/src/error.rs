use thiserror::Error;

use crate::exact::Field;

#[derive(Debug, Error)]
pub enum Error {
    #[error("entries from different fields: {0} and {1}")]
    FieldMismatch(Field, Field),

    #[error("unsupported field {field}: {reason}")]
    UnsupportedField { field: String, reason: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("cyclic superspecies: {0}")]
    Cyclic(String),

    #[error("undecided over this field: {0}")]
    Undecided(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
