use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator in rational function")]
    ZeroDenominator,
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("{what} has size {size}, limit is {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("box {0} has no upper bound; the filling search space is infinite")]
    Unbounded(String),
    #[error("constraint graph has a cycle through box {0}")]
    Cycle(String),
    #[error("no skew diagram is consistent with the weight: {0}")]
    Reconstruction(String),
    #[error("character {0} is not covered by the linear-character criterion")]
    UnsupportedCharacter(String),
    #[error("module is not of coinvariant type (det multiplicity {0})")]
    NotCoinvariantType(usize),
    #[error("oracle consistency check failed: {0}")]
    Oracle(String),
}

pub type Result<T> = std::result::Result<T, Error>;
