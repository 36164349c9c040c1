use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported dimension {0}: closed form known only for d = 5 and d = 6")]
    UnsupportedDimension(u32),
    #[error("cannot parse {input:?} as {expected}")]
    Parse { input: String, expected: &'static str },
    #[error("invalid monomial ideal: {0}")]
    InvalidIdeal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn parse(input: &str, expected: &'static str) -> Self {
        Error::Parse { input: input.to_string(), expected }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
