use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("singular matrix")]
    SingularMatrix,

    #[error("samples are not consistent with a homogeneous polynomial of the stated degree")]
    NonHomogeneousData,

    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),

    #[error("resolvent pole: u0 = {0} lies in the spectrum")]
    ResolventPole(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
