use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("position {x} lies outside the well [0, {width}]")]
    OutOfWell { x: f64, width: f64 },

    #[error("invalid well parameter `{name}` = {value}: must be finite and > 0")]
    InvalidWell { name: &'static str, value: f64 },

    #[error("quantum number must be >= 1, got {0}")]
    InvalidIndex(u32),

    #[error("superposition has no nonzero amplitude")]
    ZeroState,

    #[error("superposition term n = {0} appears more than once")]
    DuplicateIndex(u32),

    #[error("c2 = 0: ratio c1/(2 c2) is undefined")]
    DegenerateRatio,

    #[error("coefficients must be real for the analytic node formula (c1 = {c1}, c2 = {c2})")]
    ComplexCoefficients { c1: String, c2: String },

    #[error("|A| = {0} is outside the supported range for this operation")]
    RatioOutOfRange(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
