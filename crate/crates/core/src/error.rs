use thiserror::Error;

use crate::{BitLen, Natural};

/// Errors raised by the integer primitives and everything built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is undefined at zero")]
    UndefinedAtZero(&'static str),

    #[error("value {value} does not fit in a {len}-bit frame")]
    OutOfFrame { value: Natural, len: BitLen },

    #[error("length {len} exceeds the supported maximum of {max} bits")]
    LengthTooLarge { len: BitLen, max: BitLen },

    #[error("length must be at least {min}, got {len}")]
    LengthTooSmall { len: BitLen, min: BitLen },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("expected a list of {expected} entries, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("index ({row}, {col}) outside a {rows}x{cols} matrix")]
    IndexOutOfBounds {
        row: u64,
        col: u64,
        rows: u64,
        cols: u64,
    },

    #[error("position map is not a bijection on 0..{0}")]
    NotBijective(usize),

    #[error("{0} has no predecessor at w = 0")]
    NoPredecessor(&'static str),

    #[error("odd length {0} is unsupported; only even-order palindromes are handled")]
    OddLength(BitLen),

    #[error("invalid run-length code: {0}")]
    InvalidCode(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
