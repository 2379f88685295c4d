use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent must be a positive integer at position {pos}")]
    ZeroExponent { pos: usize },
    #[error("coefficient {0} is a nonconstant q-polynomial")]
    NonConstantCoefficient(String),
    #[error("polynomial carries q-dependent coefficients but canonical mode was requested")]
    MixedModes,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{what} = {got} exceeds the enumeration cap {cap}")]
    ScaleCap {
        what: &'static str,
        got: usize,
        cap: usize,
    },
    #[error("index {index} out of range for series of order {order}")]
    OutOfRange { index: usize, order: usize },
    #[error("invalid weight spec {0:?}")]
    WeightSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
