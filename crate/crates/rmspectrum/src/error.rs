use std::fmt;

/// Errors produced by parsing, algebra and construction operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The ANF expression text is malformed; `position` is 1-based.
    Syntax { position: usize, message: String },
    /// A variable index fell outside `[1, n]`.
    VarOutOfRange { index: usize, n: usize },
    /// Two operands live over different ambient variable counts.
    VarCountMismatch { left: usize, right: usize },
    /// A degree precondition of a construction was violated.
    DegreeTooHigh { degree: usize, limit: usize },
    /// Monomial supports of unequal degree where equal degree is required.
    DegreeMismatch { left: usize, right: usize },
    /// The four intersection cardinalities cannot come from actual sets.
    InvalidProfile(String),
    /// A closed-form formula was asked for parameters outside its domain.
    FormulaDomain(String),
    /// An operation only supports specific parameter values.
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Syntax { position, message } => {
                write!(f, "syntax error at position {position}: {message}")
            }
            Error::VarOutOfRange { index, n } => {
                write!(f, "variable index x{index} out of range [1, {n}]")
            }
            Error::VarCountMismatch { left, right } => {
                write!(f, "variable count mismatch: {left} vs {right}")
            }
            Error::DegreeTooHigh { degree, limit } => {
                write!(f, "degree {degree} exceeds limit {limit}")
            }
            Error::DegreeMismatch { left, right } => {
                write!(f, "support degree mismatch: {left} vs {right}")
            }
            Error::InvalidProfile(msg) => write!(f, "invalid intersection profile: {msg}"),
            Error::FormulaDomain(msg) => write!(f, "formula domain error: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
