use alloc::string::String;
use core::fmt;

/// Every failure the exact kernels can report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation that needs a degree (or a nonzero value) got the zero polynomial.
    ZeroPolynomial(&'static str),
    /// `gcd(0, 0)` is undefined.
    BothZero,
    /// Polynomial division by zero.
    DivisionByZero,
    /// Exact division left a remainder.
    NotDivisible,
    /// Malformed polynomial or rational text.
    Parse(String),
    /// A sequence parameter violates its family's hypotheses.
    InvalidSpec(String),
    /// The sequence is too short for the requested index.
    SequenceTooShort { needed: usize, available: usize },
    /// A caller-side precondition did not hold.
    Precondition(String),
    /// An inconsistency inside a computation that should be impossible;
    /// always a bug, never a verdict.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPolynomial(op) => write!(f, "{op}: zero polynomial not allowed"),
            Error::BothZero => f.write_str("gcd of two zero polynomials is undefined"),
            Error::DivisionByZero => f.write_str("polynomial division by zero"),
            Error::NotDivisible => f.write_str("exact division left a nonzero remainder"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::InvalidSpec(msg) => write!(f, "invalid sequence spec: {msg}"),
            Error::SequenceTooShort { needed, available } => write!(
                f,
                "sequence too short: index {needed} needed, only {available} terms available"
            ),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
