use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("not an LDP-polygon: {0}")]
    NotLdp(String),
    #[error("not a one-singularity LDP input: {0} singular cones")]
    SingularCount(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

/// Narrows a wide intermediate back to `i64`, failing loudly instead of wrapping.
pub(crate) fn narrow(v: i128, what: &'static str) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow(what))
}
