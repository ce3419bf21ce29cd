//! Crate-wide error type.

use std::fmt;

use crate::pseudo_boolean::VariableId;

/// Errors produced by formulation, reduction, solving, and I/O.
#[derive(Debug)]
pub enum Error {
    /// A polynomial or QUBO was evaluated with an assignment that does not
    /// cover one of its variables.
    MissingVariable(VariableId),
    /// A bit vector had the wrong length for the requested decoding.
    LengthMismatch { expected: usize, actual: usize },
    /// Degree reduction only supports polynomials up to degree 3.
    UnsupportedDegree(usize),
    /// A QUBO with no nonzero coefficients has no coefficient statistics.
    EmptyProblem,
    /// Exhaustive enumeration refused a problem above its dimension guard.
    DimensionTooLarge { dimension: usize, limit: usize },
    /// Two force solutions live on different meshes.
    MeshMismatch(String),
    /// A problem definition or solver configuration failed validation.
    InvalidConfig(String),
    /// The remote sampler could not be reached or the connection failed.
    Transport(String),
    /// The remote sampler did not answer within the allotted time.
    Timeout(String),
    /// The remote sampler's response could not be parsed.
    MalformedResponse(String),
    /// A remotely reported energy disagrees with local re-evaluation.
    EnergyMismatch {
        sample: usize,
        reported: f64,
        actual: f64,
    },
    /// Filesystem or serialization failure.
    Io(std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MissingVariable(v) => {
                write!(f, "assignment does not cover variable {v}")
            }
            Error::LengthMismatch { expected, actual } => {
                write!(f, "expected {expected} bits, got {actual}")
            }
            Error::UnsupportedDegree(d) => {
                write!(f, "degree {d} polynomial: reduction supports degree <= 3")
            }
            Error::EmptyProblem => write!(f, "problem has no nonzero coefficients"),
            Error::DimensionTooLarge { dimension, limit } => write!(
                f,
                "dimension {dimension} exceeds exhaustive guard {limit}; \
                 use simulated annealing or raise the limit"
            ),
            Error::MeshMismatch(msg) => write!(f, "mesh mismatch: {msg}"),
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            Error::Transport(msg) => write!(f, "transport failure: {msg}"),
            Error::Timeout(msg) => write!(f, "remote sampler timed out: {msg}"),
            Error::MalformedResponse(msg) => write!(f, "malformed response: {msg}"),
            Error::EnergyMismatch {
                sample,
                reported,
                actual,
            } => write!(
                f,
                "sample {sample}: reported energy {reported} disagrees with \
                 local re-evaluation {actual}"
            ),
            Error::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}
