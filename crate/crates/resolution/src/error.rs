use ncrw_rewrite::RewriteError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ResolutionError {
    #[error("the resolution is constructed for n >= 3, got n = {0}")]
    SmallN(usize),
    #[error("stage must be 1, 2 or 3, got {0}")]
    BadStage(u8),
    #[error("map {map} has no generator {generator}")]
    BadGenerator { map: u8, generator: String },
    #[error("kernel generator {label} does not match: residue {residue}")]
    MatchFailure { label: String, residue: String },
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}
