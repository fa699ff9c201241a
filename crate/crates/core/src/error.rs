//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by ring construction and the analyses built on top of it.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A ring axiom failed during validation. `witness` holds the element
    /// codes of the offending tuple.
    #[error("axiom `{axiom}` violated at witness {witness:?}")]
    AxiomViolation {
        axiom: &'static str,
        witness: Vec<u64>,
    },

    /// An exhaustive scan was requested on a carrier larger than the
    /// configured bound.
    #[error("{what}: size {size} exceeds bound {bound} (raise --max-scan to override)")]
    TooLarge {
        what: &'static str,
        size: u64,
        bound: u64,
    },

    /// A construction parameter failed its precondition.
    #[error("bad parameter: {0}")]
    BadParameter(String),

    /// An element handle was used with a ring it does not belong to.
    #[error("element code {code} does not belong to ring `{ring}`")]
    CrossRingElement { code: u64, ring: String },

    /// An operation required a projection and got something else.
    #[error("element {0} is not a projection (needs e^2 = e and e* = e)")]
    NotAProjection(u64),

    /// Unitification requires p * a = 0 for every ring element.
    #[error("characteristic mismatch: {0}")]
    CharacteristicMismatch(String),

    /// An operation required a unity element the ring does not have.
    #[error("ring has no unity element")]
    NoUnity,

    /// The commutant of a non-self-adjoint set need not be star-closed.
    #[error("commutant is not closed under the involution (witness element {witness})")]
    NotStarClosed { witness: u64 },

    /// Text input (construction expression, Cayley file, witness matrix)
    /// failed to parse.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Underlying I/O failure while reading an input file.
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
