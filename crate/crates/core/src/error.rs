//! Error taxonomy shared by every module of the engine.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("coefficient characteristic mismatch: expected {expected}, found {found}")]
    CharMismatch { expected: u32, found: u32 },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("invalid ring presentation: {0}")]
    InvalidRing(String),

    #[error("module rank mismatch: component {component} out of range for rank {rank}")]
    RankMismatch { rank: usize, component: usize },

    #[error("matrix dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("presentation is not minimal: variable {variable} occurs as a bare term of a generator")]
    NonMinimalPresentation { variable: String },

    #[error("operation requires the standard grading (all weights 1)")]
    NonStandardGrading,

    #[error("polynomial is not weighted-homogeneous: terms of degree {degree_a} and {degree_b}")]
    Inhomogeneous { degree_a: u64, degree_b: u64 },

    #[error("sequence is not a verified system of parameters")]
    NotSop,

    #[error("ring is not an almost complete intersection")]
    NotAci,

    #[error("sequence must be nonempty")]
    EmptySequence,

    #[error("homological index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("degree bound too small: homology piece at degree {degree} is nonzero")]
    BoundTooSmall { degree: u64 },

    #[error("bad socle witness: {0}")]
    BadWitness(String),

    #[error("hypothesis not met: {precondition}")]
    HypothesisNotMet { precondition: &'static str },

    #[error("element does not lie in the maximal ideal")]
    NotInMaximalIdeal,

    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{name}` at byte {position}")]
    UnknownVariable { position: usize, name: String },

    #[error("bad characteristic: denominator {denominator} is not invertible")]
    BadCharacteristic { denominator: String },

    #[error("invalid presentation file: {0}")]
    InvalidPresentationFile(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
