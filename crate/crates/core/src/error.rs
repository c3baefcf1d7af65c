use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed quiver spec: {0}")]
    Parse(String),
    #[error("quiver has an oriented cycle")]
    CyclicQuiver,
    #[error("underlying valued graph is not Dynkin: {0}")]
    NotDynkin(String),
    #[error("{0:?} is not a positive root of this quiver")]
    NotARoot(Vec<i64>),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("point lies on a wall: {0}")]
    AmbiguousPoint(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// Short machine-readable tag used in CLI error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::CyclicQuiver => "cyclic_quiver",
            Error::NotDynkin(_) => "not_dynkin",
            Error::NotARoot(_) => "not_a_root",
            Error::Unsupported(_) => "unsupported",
            Error::Resource(_) => "resource",
            Error::InvalidInput(_) => "invalid_input",
            Error::AmbiguousPoint(_) => "ambiguous_point",
            Error::InvariantViolation(_) => "invariant_violation",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
