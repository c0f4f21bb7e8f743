//! Error taxonomy shared by every module.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("{what}: size {n} exceeds the supported cap {cap}")]
    Scale {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("vector value {bits:#b} does not fit in dimension {dim}")]
    OutOfRange { bits: u32, dim: usize },

    #[error("the zero vector is not a valid character")]
    ZeroCharacter,

    #[error("vector is not contained in the subspace")]
    NotInSubspace,

    #[error("point set contains 0, but this operation requires a simple set")]
    NotSimple,

    #[error("element is not a member of the point set")]
    NotMember,

    #[error("invalid circuit input: {0}")]
    InvalidCircuit(String),

    #[error("probability {0} is outside [0, 1]")]
    BadProbability(String),

    #[error("threshold must be positive, got {0}")]
    NonPositiveThreshold(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("no parameter of the required form exists: {0}")]
    Infeasible(String),

    #[error("a guaranteed branch failed; instance preserved at {dump}: {what}")]
    Counterexample { what: String, dump: String },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn io(path: impl Into<String>) -> impl FnOnce(std::io::Error) -> Error {
        let path = path.into();
        move |source| Error::Io { path, source }
    }
}
