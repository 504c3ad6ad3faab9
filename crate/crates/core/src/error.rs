use alloc::string::String;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid exponent sequence: {0}")]
    InvalidExponents(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("{name} = {value} is outside its domain")]
    Domain { name: &'static str, value: f64 },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("partition of length {length} evaluated at {variables} variables")]
    TooFewVariables { length: usize, variables: usize },
    #[error("skew shape: inner partition is not contained in the outer one")]
    NotContained,
    #[error("coincident nodes need derivative information")]
    CoincidentNodes,
    #[error("exponent {0} is already present")]
    DuplicateExponent(f64),
    #[error("exponent source is not increasing at index {index} (value {value})")]
    NonIncreasingSource { index: usize, value: f64 },
    #[error("exact arithmetic requires integer exponents")]
    NonIntegerExponents,
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
    #[error("numeric singularity: {0}")]
    Singular(&'static str),
    #[error("degenerate hyperplane (zero normal)")]
    DegenerateHyperplane,
}

pub type Result<T> = core::result::Result<T, Error>;
