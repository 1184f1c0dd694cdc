use thiserror::Error;

use crate::algebra::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("n must be at least 1")]
    ZeroDimension,

    #[error("alphabet is not indexed by matrix entries u_ij")]
    NotMatrixAlphabet,

    #[error("degree {needed} exceeds the certified degree {certified} of the basis")]
    CertificationExceeded { needed: usize, certified: usize },

    #[error("resource limit: {what} needs {needed} words, cap is {cap}")]
    ResourceLimit { what: String, needed: usize, cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("derivation of rule {0} is not available (basis was loaded from an exchange file)")]
    MissingDerivation(usize),

    #[error("self-check failed: {0}")]
    SelfCheck(String),

    #[error("{stage}: {source}")]
    Stage { stage: String, source: Box<Error> },

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("malformed document: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
