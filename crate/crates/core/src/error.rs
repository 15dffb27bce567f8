use thiserror::Error;

/// Errors raised by the library surface.
#[derive(Debug, Error)]
pub enum Error {
    #[error("failed to load text: {0}")]
    Load(#[from] std::io::Error),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("oracle refused: {cells} cells exceeds the limit of {limit}")]
    OracleRefused { cells: u128, limit: u128 },

    #[error("cannot parse rational literal {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn contract<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Contract(msg.into()))
}
