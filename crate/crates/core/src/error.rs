use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A brute-force enumeration was asked to exceed its configured bound.
    #[error("weight {n} exceeds the {what} cap of {cap}; {hint}")]
    Capacity {
        what: &'static str,
        n: usize,
        cap: usize,
        hint: &'static str,
    },

    /// A proven invariant failed at runtime. This always indicates a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
