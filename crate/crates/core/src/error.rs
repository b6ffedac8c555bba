use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("{a} is not coprime to the conductor {conductor}")]
    NotAnAutomorphism { a: i64, conductor: u64 },
    #[error("inconsistent algebra: {0}")]
    InconsistentSpec(String),
    #[error("outside desk scale: {0}")]
    Scale(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable code used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Shape(_) => "shape",
            Error::NotAnAutomorphism { .. } => "not_an_automorphism",
            Error::InconsistentSpec(_) => "inconsistent_spec",
            Error::Scale(_) => "scale",
            Error::Degenerate(_) => "degenerate_input",
            Error::Internal(_) => "internal",
            Error::OutOfRange(_) => "out_of_range",
            Error::Parse(_) => "parse",
        }
    }
}
