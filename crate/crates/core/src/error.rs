use thiserror::Error;

/// Errors raised by the core data types.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("malformed letter token `{0}`")]
    BadToken(String),
    #[error("malformed rational `{0}`")]
    BadScalar(String),
    #[error("duplicate letter `{0}` in alphabet")]
    DuplicateLetter(String),
    #[error("the zero polynomial has no leading monomial")]
    ZeroPolynomial,
    #[error("no strict maximum: `{0}` and `{1}` are both maximal")]
    NoStrictMaximum(String, String),
    #[error("invalid ordering: {0}")]
    BadOrdering(String),
    #[error("letter id {0} is outside the alphabet")]
    LetterOutOfRange(u32),
    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for CoreError {
    fn from(e: serde_json::Error) -> Self {
        CoreError::Json(e.to_string())
    }
}
