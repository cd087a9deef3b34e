//! Error type shared across the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by state constructors, analytic formulas, and sweeps.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An input lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A Fock-space cutoff is too small to hold the requested state.
    #[error("truncation error: {0}")]
    Truncation(String),

    /// A run configuration field is invalid.
    #[error("configuration error in `{field}`: {message}")]
    Config { field: String, message: String },

    /// A numerical invariant (normalization, conservation, purity bound)
    /// was violated during a computation.
    #[error("numerical invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn config(field: &str, message: impl Into<String>) -> Self {
        Error::Config { field: field.to_string(), message: message.into() }
    }
}
