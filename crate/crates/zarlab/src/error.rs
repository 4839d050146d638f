use std::fmt;

/// Crate-wide error type.
#[derive(Debug)]
pub enum Error {
    /// An argument is outside the operation's domain (bad parameter range,
    /// non-prime characteristic, mismatched field order, ...).
    Domain(String),
    /// Malformed input while parsing a graph file; `line` is 1-based when known.
    Parse { line: Option<usize>, message: String },
    /// The instance exceeds a configured enumeration or size cap. Never a
    /// wrong answer: the caller gets an explicit refusal instead.
    TooLarge(String),
    /// An internal self-check failed (e.g. a construction that should be
    /// K_{s,t}-free is not). Indicates a bug, not a user error.
    Inconsistent(String),
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Parse { line: Some(line), message } => {
                write!(f, "parse error at line {line}: {message}")
            }
            Error::Parse { line: None, message } => write!(f, "parse error: {message}"),
            Error::TooLarge(msg) => write!(f, "instance too large: {msg}"),
            Error::Inconsistent(msg) => write!(f, "internal inconsistency: {msg}"),
            Error::Io(err) => write!(f, "io error: {err}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(err) => Some(err),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
