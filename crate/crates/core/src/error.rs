use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Inputs that do not fit together (degree mismatch, unknown generator, ...).
    #[error("structural error: {0}")]
    Structural(String),

    /// A presentation or parameter set that the builders refuse to handle.
    #[error("rejected: {0}")]
    Rejected(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// The configured size budget would be exceeded. `partial` carries whatever
    /// lower bound had been established before giving up.
    #[error("resource budget exceeded: {what} ({size} > {limit})")]
    Resource {
        what: String,
        size: usize,
        limit: usize,
        partial: Option<usize>,
    },

    /// An identity that must hold in a model failed; indicates a sign or
    /// construction bug rather than bad input.
    #[error("model inconsistency: {0}")]
    ModelInconsistency(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("certificate failed: {message}; nonzero terms: [{}]", nonzero_terms.join(", "))]
    CertificateFailure {
        message: String,
        nonzero_terms: Vec<String>,
    },

    #[error("not a Poincaré duality algebra: {0}")]
    NotPoincareDuality(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
