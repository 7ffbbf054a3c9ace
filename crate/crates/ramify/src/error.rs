//! Error type shared by every module of the crate.
//!
//! Errors split into two families: *input* errors (bad expressions, bad
//! documents, towers that cannot be normalized) and *internal* errors
//! (broken invariants that indicate a bug in the library itself).  The CLI
//! maps the first family to exit code 2 and the second to exit code 3.

use std::fmt;

/// Position-annotated failure from the expression parser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character position of the offending token.
    pub position: usize,
    /// What the parser was prepared to accept at this point.
    pub expected: String,
    /// What it actually saw.
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at position {}: expected {}, found {}",
            self.position, self.expected, self.found
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The requested modulus is not a prime in the supported range.
    NotPrime(u64),
    /// Arithmetic between residues of different prime fields.
    ModulusMismatch { left: u32, right: u32 },
    /// Inversion of zero or a p-adic valuation of zero.
    DivisionByZero,
    /// Malformed expression text.
    Parse(ParseError),
    /// Structurally invalid input (documents, exponents, vector shapes, ...).
    Invalid(String),
    /// An element or monomial refers to a level the tower does not have.
    LevelOutOfRange { level: usize, height: usize },
    /// Witt vector length outside the supported range.
    UnsupportedLength(usize),
    /// The candidate equation does not cut out a totally ramified extension.
    NotTotallyRamified { level: usize, valuation: Option<i64> },
    /// Generator normalization could not finish at the given level.
    Normalization { level: usize, reason: String },
    /// Galois data was requested for a tower not built from a Witt vector.
    NotWittGenerated,
    /// Truncation order too small to certify the requested expansion.
    TruncationTooCoarse { required: i64, requested: i64 },
    /// A broken internal invariant; reported by the CLI with exit code 3.
    Internal(String),
}

impl Error {
    /// Internal invariant violations are distinguished from bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }

    /// Shorthand used by invariant checks throughout the crate.
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not a prime in the supported range 2..65536"),
            Error::ModulusMismatch { left, right } => {
                write!(f, "mixed moduli: F_{left} element combined with F_{right} element")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Parse(e) => e.fmt(f),
            Error::Invalid(msg) => write!(f, "invalid input: {msg}"),
            Error::LevelOutOfRange { level, height } => {
                write!(f, "level {level} out of range for a tower of height {height}")
            }
            Error::UnsupportedLength(n) => {
                write!(f, "Witt vectors of length {n} unsupported (supported: 1..=4)")
            }
            Error::NotTotallyRamified { level, valuation } => match valuation {
                Some(v) => write!(
                    f,
                    "level {level} is not totally ramified: defining element has valuation {v} >= 0"
                ),
                None => write!(
                    f,
                    "level {level} is not totally ramified: defining element vanished"
                ),
            },
            Error::Normalization { level, reason } => {
                write!(f, "normalization failed at level {level}: {reason}")
            }
            Error::NotWittGenerated => {
                write!(f, "Galois action is only available for towers built from a Witt vector")
            }
            Error::TruncationTooCoarse { required, requested } => write!(
                f,
                "truncation order {requested} too coarse: the leading term is only certified from order {required}"
            ),
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}
