//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("degree cap exceeded: n = {n}, cap = {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("unknown algebra '{0}'")]
    UnknownAlgebra(String),

    #[error("parameter out of range for {family}: got {value}, need at least {min}")]
    ParameterOutOfRange {
        family: String,
        value: u32,
        min: u32,
    },

    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("commutator needs at least two entries (at byte {0})")]
    CommutatorArity(usize),

    #[error("expansion is not multilinear: {0}")]
    NotMultilinear(String),

    #[error("mixed or undeclared sector: {0}")]
    MixedSector(String),

    #[error("grading violation: {0}")]
    ParityViolation(String),

    #[error("variable reuse in substitution: {0}")]
    VariableReuse(String),

    #[error("permutation does not match sector size")]
    PermSizeMismatch,

    #[error("partition weight mismatch: |lambda| = {0} but |cycle type| = {1}")]
    WeightMismatch(usize, usize),

    #[error("negative multiplicity at {0}: exactness violated, aborting")]
    NegativeMultiplicity(String),

    #[error("algebra failed validation: {0}")]
    InvalidAlgebra(String),

    #[error("substitution stream too large ({tuples} tuples); lower n or use a fast-path family")]
    EvalTooLarge { tuples: u128 },

    #[error("malformed formula: {0}")]
    MalformedFormula(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
