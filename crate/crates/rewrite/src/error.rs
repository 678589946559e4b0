use ncrw_core::CoreError;
use thiserror::Error;

use crate::ReductionTrace;

#[derive(Debug, Error)]
pub enum RewriteError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("rule {0} has an empty left-hand side")]
    EmptyLhs(usize),
    #[error("rule {0}: left-hand side occurs in its right-hand side")]
    LhsInRhs(usize),
    #[error("rule {index} ({tag}) is not strictly decreasing")]
    NotDecreasing { index: usize, tag: String },
    #[error("the lex ordering is neither noetherian nor multiplicative")]
    LexOrderingRejected,
    #[error("ordering is not certified noetherian and multiplicative")]
    UncertifiedOrdering,
    #[error("step limit of {limit} rewrites exceeded")]
    StepLimitExceeded { limit: u64, partial: Box<ReductionTrace> },
    #[error("polynomial is not of module degree one")]
    NotDegreeOne,
    #[error("rule {0} has more than one module letter in its left-hand side")]
    BadModuleRule(usize),
    #[error("rule {0} is an urbild rule whose right-hand side leaves the urbild module")]
    UrbildNotClosed(usize),
    #[error("weak completeness has not been verified")]
    WeakCompletenessNotVerified,
    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for RewriteError {
    fn from(e: serde_json::Error) -> Self {
        RewriteError::Json(e.to_string())
    }
}
