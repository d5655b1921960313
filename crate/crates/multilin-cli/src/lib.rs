//! JSON interchange and the seeded verification harness behind the
//! `multilin` command-line tool.

pub mod json;
pub mod verify;

use thiserror::Error;

/// Tool-level errors, grouped by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Exit 2: an input file violates its schema; the message names the
    /// offending field or flag.
    #[error("schema violation: {0}")]
    Schema(String),
    /// Exit 3: operand dimensions do not fit together.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// Exit 4: an operation required an invertible matrix.
    #[error("singular matrix: {0}")]
    Singular(String),
    /// Exit 1: filesystem trouble.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Schema(_) => 2,
            CliError::Dimension(_) => 3,
            CliError::Singular(_) => 4,
        }
    }
}

/// Classifies a core error: shape clashes exit 3, singularity exits 4,
/// everything else is treated as bad input.
pub fn from_core(err: multilin::Error) -> CliError {
    use multilin::Error as E;
    match err {
        E::DimensionMismatch(_)
        | E::LengthMismatch { .. }
        | E::ArityMismatch { .. }
        | E::NotSquare => CliError::Dimension(err.to_string()),
        E::Singular => CliError::Singular(err.to_string()),
        _ => CliError::Schema(err.to_string()),
    }
}
