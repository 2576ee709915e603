use thiserror::Error;

use crate::formula::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("enumeration cap exceeded: {atoms} decision atoms need 2^{atoms} assignments, cap is {cap}")]
    CapExceeded { atoms: usize, cap: u64 },

    #[error("formula is not evaluable over the closure: no atom for `{0}`")]
    UnknownAtom(String),

    #[error("invalid world: {0}")]
    InvalidWorld(String),

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("conditioning formula `{0}` has probability zero")]
    ZeroCondition(String),

    #[error("bayes hypothesis violated: P({0}) = 0")]
    HypothesisViolated(String),

    #[error("probability out of range for `{formula}`: {value}")]
    OutOfRange { formula: String, value: String },

    #[error("input derivation invalid at line {line}: {reason}")]
    InvalidDerivation { line: usize, reason: String },

    #[error("hypothesis `{0}` is not among the derivation's premises")]
    HypothesisNotPremise(String),

    #[error("sample space has {size} outcomes, at most {max} supported")]
    OmegaTooLarge { size: usize, max: usize },

    #[error("invalid space: {0}")]
    InvalidSpace(String),

    #[error("not a sigma-algebra: {0}")]
    NotSigmaAlgebra(String),

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
}

impl Error {
    /// Stable short code for command-line reporting.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::Format { .. } => "format",
            Error::CapExceeded { .. } => "cap-exceeded",
            Error::UnknownAtom(_) => "closure-mismatch",
            Error::InvalidWorld(_) => "invalid-world",
            Error::InvalidDistribution(_) => "invalid-distribution",
            Error::ZeroCondition(_) => "zero-condition",
            Error::HypothesisViolated(_) => "hypothesis-violated",
            Error::OutOfRange { .. } => "out-of-range",
            Error::InvalidDerivation { .. } => "invalid-derivation",
            Error::HypothesisNotPremise(_) => "hypothesis-not-premise",
            Error::OmegaTooLarge { .. } => "size-cap",
            Error::InvalidSpace(_) => "invalid-space",
            Error::NotSigmaAlgebra(_) => "not-sigma-algebra",
            Error::InvalidMeasure(_) => "invalid-measure",
        }
    }
}
