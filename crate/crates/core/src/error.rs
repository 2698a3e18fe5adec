use alloc::string::String;

/// Errors raised by the algebra, descent and analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not a square: {0}")]
    NotSquare(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("reducible: {0}")]
    Reducible(String),
    #[error("no rational point: {0}")]
    NoRationalPoint(String),
    #[error("no descent exists: {0}")]
    NoDescent(String),
    #[error("reduction failure: {0}")]
    ReductionFailure(String),
    #[error("rationality obstruction: {0}")]
    RationalityObstruction(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! bail {
    ($variant:ident, $($arg:tt)*) => {
        return Err($crate::error::Error::$variant(alloc::format!($($arg)*)))
    };
}
pub(crate) use bail;
