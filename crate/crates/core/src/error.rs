use thiserror::Error;

/// Errors raised by the engine.
///
/// The `Falsified` variant is reserved for checks whose failure would
/// contradict a structural claim about the ring (a missing eigenvector, a
/// nonvanishing annihilation certificate, a span mismatch). Everything else
/// is a usage or shape error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("quotient algebra is infinite-dimensional")]
    InfiniteQuotient,
    #[error("genus {genus} out of range: {reason}")]
    GenusOutOfRange { genus: u32, reason: &'static str },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("spectrum outside candidate list: {0}")]
    SpectrumOutsideCandidates(String),
    #[error("falsified: {0}")]
    Falsified(String),
}

pub type Result<T> = std::result::Result<T, Error>;
