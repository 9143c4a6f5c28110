use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A guarded intermediate left the supported integer width.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    /// An indexed sequence left the supported width after `last_valid`.
    #[error("{what}: index {} overflows the supported width (last valid index {last_valid})", last_valid + 1)]
    IndexOverflow { what: &'static str, last_valid: u32 },
    /// An argument is outside the domain of the operation.
    #[error("{0}")]
    Domain(String),
    /// A constructed value failed its own verification.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn is_overflow(&self) -> bool {
        matches!(self, Error::Overflow(_) | Error::IndexOverflow { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
