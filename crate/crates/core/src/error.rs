use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("singular Sylvester system: the operator M -> MB - CM is not invertible")]
    SingularSylvester,

    #[error("spectrum mismatch: Jordan data accounts for {found} of {expected} dimensions")]
    SpectrumMismatch { found: usize, expected: usize },

    #[error("conjugate eigenvalues {0} carry different Jordan data")]
    ConjugatePairMismatch(String),

    #[error("cannot remove a part from the empty partition")]
    EmptyPartition,

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid orbit datum: {0}")]
    InvalidOrbit(String),

    #[error("invalid index selection: {0}")]
    InvalidSelection(String),

    #[error("malformed p-bar representative: {0}")]
    MalformedRepresentative(String),

    #[error("UnsupportedOrbitShape: {0}")]
    UnsupportedOrbitShape(String),

    #[error("sign assignment does not match orbit: {0}")]
    SignMismatch(String),

    #[error("invalid representation label: {0}")]
    InvalidLabel(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("normal form certificate failed: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
