//! Error type shared by all modules of the crate.

use alloc::string::String;
use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by the exact calculus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two values that must share a length (tuples, vectors) do not.
    LengthMismatch { expected: usize, found: usize },
    /// Operands whose dimensions must agree do not; the message names
    /// the offending dimensions.
    DimensionMismatch(String),
    /// A rank/position is outside the stratum it indexes into.
    RankOutOfRange { rank: usize, size: usize },
    /// Exact division by zero.
    DivisionByZero,
    /// A matrix required to be invertible is singular.
    Singular,
    /// A square matrix was required.
    NotSquare,
    /// An upper triangular matrix was required.
    NotUpperTriangular,
    /// The image tuple does not describe a permutation.
    InvalidPermutation(String),
    /// A permutation is not a shuffle of the requested block sizes.
    NotAShuffle(String),
    /// Entries are not strictly increasing or fall outside `1..=n`.
    InvalidStrictIndex(String),
    /// A multilinear map was applied to the wrong number of arguments.
    ArityMismatch { expected: usize, found: usize },
    /// A rational does not fit into a finite binary64 value.
    FloatOverflow,
    /// The norm exponent must satisfy `rho >= 1`.
    InvalidNormExponent,
    /// The operation is not defined for the given operand shape.
    Unsupported(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            Error::DimensionMismatch(msg) => write!(f, "dimension mismatch: {msg}"),
            Error::RankOutOfRange { rank, size } => {
                write!(f, "rank {rank} out of range for stratum of size {size}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Singular => write!(f, "matrix is singular"),
            Error::NotSquare => write!(f, "matrix is not square"),
            Error::NotUpperTriangular => write!(f, "matrix is not upper triangular"),
            Error::InvalidPermutation(msg) => write!(f, "invalid permutation: {msg}"),
            Error::NotAShuffle(msg) => write!(f, "not a block shuffle: {msg}"),
            Error::InvalidStrictIndex(msg) => write!(f, "invalid strict index: {msg}"),
            Error::ArityMismatch { expected, found } => {
                write!(
                    f,
                    "arity mismatch: map takes {expected} arguments, got {found}"
                )
            }
            Error::FloatOverflow => write!(f, "value does not fit into a finite f64"),
            Error::InvalidNormExponent => write!(f, "norm exponent must be >= 1"),
            Error::Unsupported(msg) => write!(f, "unsupported operation: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
