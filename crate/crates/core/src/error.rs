use thiserror::Error;

use crate::expr::ParseError;
use crate::poly::Var;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("zero quaternion has no inverse")]
    ZeroInverse,
    #[error("no value assigned to variable {0}")]
    Unassigned(Var),
    #[error("cannot differentiate with respect to {0}: only a, b, c, d are position variables")]
    NotPositional(Var),
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown identity id `{id}`; valid ids: {}", valid.join(", "))]
    UnknownIdentity { id: String, valid: Vec<String> },
    #[error("engine and oracle disagree on {context}: engine `{engine}`, oracle `{oracle}`")]
    Divergence {
        context: String,
        engine: String,
        oracle: String,
    },
}

impl Error {
    /// Process exit status used by the command line for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Parse(_) | Error::UnknownIdentity { .. } => 2,
            Error::ZeroInverse
            | Error::Unassigned(_)
            | Error::NotPositional(_)
            | Error::Domain(_) => 3,
            Error::Divergence { .. } => 4,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
