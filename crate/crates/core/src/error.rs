use thiserror::Error;

/// Errors produced anywhere in the library.
///
/// `Consistency` is special: it is only raised when a computed object
/// violates a structural statement that is supposed to hold under the
/// hypotheses that were checked beforehand. Callers that drive a full
/// analysis surface it separately from ordinary input errors.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a supported prime (must be prime and below 65536)")]
    InvalidPrime(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group order exceeds the configured cap of {cap}")]
    OrderCap { cap: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not a {0}-group")]
    NotPGroup(u32),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid family specification: {0}")]
    InvalidFamily(String),
    #[error("invalid central product: {0}")]
    CentralProduct(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("io error: {0}")]
    Io(String),
    #[error("algebra elements belong to different groups or primes")]
    GroupMismatch,
    #[error("not applicable: {0}")]
    Inapplicable(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
