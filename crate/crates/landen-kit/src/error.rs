//! Error taxonomy shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Evaluation too close to a pole of the requested function.
    #[error("pole error: {0}")]
    Pole(String),
    /// Formula requested with the wrong parity of the order p.
    #[error("parity error: {0}")]
    Parity(String),
    /// Closed form only available for specific orders.
    #[error("unsupported order p={0}")]
    UnsupportedOrder(u32),
    /// Identity not applicable to the given (p, r) combination.
    #[error("not applicable: {0}")]
    Applicability(String),
    /// Value outside the valid range of the selected branch.
    #[error("range error: {0}")]
    Range(String),
    /// Field amplitude too close to +-1 for the first-integral denominator.
    #[error("denominator error: {0}")]
    Denominator(String),
    /// First integral failed to stay constant along the profile.
    #[error("non-conservation: {0}")]
    NonConservation(String),
    /// Branch tracking of the reconstructed phase failed.
    #[error("branch error: {0}")]
    Branch(String),
}

impl Error {
    /// Stable category name, used by the CLI for exit codes and reports.
    pub fn category(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Pole(_) => "pole",
            Error::Parity(_) => "parity",
            Error::UnsupportedOrder(_) => "unsupported-order",
            Error::Applicability(_) => "applicability",
            Error::Range(_) => "range",
            Error::Denominator(_) => "denominator",
            Error::NonConservation(_) => "non-conservation",
            Error::Branch(_) => "branch",
        }
    }
}
