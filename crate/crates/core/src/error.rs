use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field of size {p}^{e} exceeds 2^16 elements")]
    TooLarge { p: u64, e: u32 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("element code {code} out of range for a field with {q} elements")]
    InvalidElement { code: u32, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live over different fields or rings")]
    FieldMismatch,
    #[error("form is not divisible")]
    NotDivisible,
    #[error("operation requires a nonzero form")]
    ZeroForm,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("arrow {0} has an endpoint outside the vertex set")]
    DanglingArrow(String),
    #[error("duplicate id {0}")]
    DuplicateId(String),
    #[error("bad size: {0}")]
    BadSize(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("basepoint is not an element of the set")]
    BasepointMissing,
    #[error("quiver is not connected")]
    NotConnected,
    #[error("enumeration of {cells} cells exceeds the cap of {cap}")]
    EnumerationTooLarge { cells: u128, cap: u64 },
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("classification failed: {0}")]
    ClassificationFailed(String),
    #[error("path/tensor mismatch: {0}")]
    MismatchFound(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("format error: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
