use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input data with the wrong shape or content.
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported size {size} (limit {limit})")]
    UnsupportedSize { size: usize, limit: usize },

    /// An operation was called on arguments violating its documented precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A Lie bracket handed to the fixture constructor fails the Jacobi identity.
    #[error("invalid fixture: Jacobi identity fails on basis triple {witness:?}")]
    InvalidFixture { witness: [usize; 3] },

    /// The algebra fails the Bol identities and the operation requires them.
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    /// The sum of the weakly solvable ideals found is not itself a weakly solvable ideal.
    #[error("structural anomaly: {0}")]
    StructuralAnomaly(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("cannot read `{path}`: {message}")]
    Read { path: String, message: String },

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("parameter `{name}`: {message}")]
    Parameter { name: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
