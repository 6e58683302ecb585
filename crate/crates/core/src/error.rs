use thiserror::Error;

/// Errors raised by sequence operations and constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Caller supplied arguments outside an operation's domain.
    #[error("usage error: {0}")]
    Usage(String),

    /// Text input could not be parsed as a sequence, pair or matrix.
    #[error("parse error: {0}")]
    Parse(String),

    /// A conditional construction's precondition failed at a specific shift.
    #[error("precondition failed at tau={tau}: {reason}")]
    Precondition { tau: usize, reason: String },

    /// A constructed object failed its own post-construction check.
    #[error("construction check failed: {0}")]
    Construction(String),

    /// The Gram matrix of a training matrix is not invertible.
    #[error("training matrix is rank deficient")]
    RankDeficient,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}
