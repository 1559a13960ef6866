use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("position {position} out of range for length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("symbol {symbol} exceeds the largest symbol {max}")]
    SymbolOutOfRange { symbol: u32, max: u32 },
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("integer overflow; use an unbounded integer type for these parameters")]
    Overflow,
    #[error("no codeword within reach of the received word")]
    NoCodeword,
    #[error("{0} codewords within reach of the received word")]
    MultipleCodewords(usize),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
