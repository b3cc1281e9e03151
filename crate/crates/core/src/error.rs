use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("pole at s = {s}")]
    Pole { s: Complex64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("series does not converge at sigma = {sigma} (need sigma > 1)")]
    Convergence { sigma: f64 },

    #[error("truncation error: {needed} terms needed, only {available} available")]
    Truncation { needed: usize, available: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("insufficient precision: {0}")]
    PrecisionInsufficient(String),

    #[error("bound mismatch: {0}")]
    BoundMismatch(String),

    #[error("compact set outside admissible strip: {0}")]
    ShapeOutsideStrip(String),

    #[error("target cannot be certified nonvanishing: {0}")]
    Nonvanishing(String),

    #[error("inadmissible collection: {0}")]
    Inadmissible(String),

    #[error("evaluator failed at shift index k = {k}: {source}")]
    Evaluator { k: usize, source: Box<Error> },

    #[error("plot kind mismatch: {0}")]
    KindMismatch(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
