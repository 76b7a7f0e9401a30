use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the class of objects handled here.
    #[error("{0}")]
    Domain(String),
    /// A value that should be integral was not.
    #[error("non-integral value: {0}")]
    NonIntegral(String),
    /// An identity that must hold for valid input failed.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::NonIntegral(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
