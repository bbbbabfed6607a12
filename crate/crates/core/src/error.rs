use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("point {point} is outside 1..={n}")]
    PointOutOfRange { point: usize, n: usize },
    #[error("not a permutation of 1..={n}: {reason}")]
    InvalidPermutation { n: usize, reason: String },
    #[error("element is not invertible: points {first} and {second} both move to {image}")]
    NotInvertible {
        first: usize,
        second: usize,
        image: usize,
    },
    #[error("vector entries are not pairwise distinct modulo {n}")]
    NotResidueDistinct { n: usize },
    #[error("n = {n} is outside the supported range {min}..={max}")]
    UnsupportedSize { n: usize, min: usize, max: usize },
    #[error("word syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("resource budget exceeded: {0}")]
    Budget(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn check_len(expected: usize, actual: usize) -> Result<()> {
        if expected == actual {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected, actual })
        }
    }

    pub(crate) fn check_size(n: usize, min: usize, max: usize) -> Result<()> {
        if (min..=max).contains(&n) {
            Ok(())
        } else {
            Err(Error::UnsupportedSize { n, min, max })
        }
    }
}
