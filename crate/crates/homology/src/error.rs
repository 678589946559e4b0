use thiserror::Error;

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error("matrix is not square: {0}x{1}")]
    NotSquare(usize, usize),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("matrix is not orthogonal: {0}")]
    NotOrthogonal(String),
    #[error("unsupported spectrum: {0}")]
    UnsupportedSpectrum(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("rank of map {map} differs: tor {tor}, ext {ext}")]
    RankMismatch { map: usize, tor: usize, ext: usize },
    #[error("malformed matrix: {0}")]
    Malformed(String),
}
