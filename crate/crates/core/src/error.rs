use thiserror::Error;

use crate::series::SeriesEvaluation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("pole: {0}")]
    Pole(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// The partial evaluation is kept so callers can still report it.
    #[error(
        "series did not converge after {} terms (tail estimate {:.3e})",
        .0.terms_used,
        .0.tail_estimate.to_f64()
    )]
    NonConvergence(Box<SeriesEvaluation>),

    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    #[error("precision loss: {0}")]
    PrecisionLoss(String),

    #[error("index out of range: {0}")]
    Range(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Pole(_) | Error::Domain(_) => 3,
            Error::NonConvergence(_) | Error::Quadrature(_) | Error::PrecisionLoss(_) => 2,
            Error::Range(_) | Error::InvalidArgument(_) | Error::Io(_) => 1,
        }
    }
}
