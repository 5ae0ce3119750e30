use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value is not {p}-integral")]
    NotIntegral { p: BigInt },
    #[error("transvectant order {r} exceeds degrees {m} and {n}")]
    TransvectantOrder { r: u32, m: u32, n: u32 },
    #[error("expected a form of degree {expected}, got {found}")]
    WrongDegree { expected: u32, found: u32 },
    #[error("prime {p} is not supported: {reason}")]
    UnsupportedPrime { p: BigInt, reason: String },
    #[error("the quartic is singular (D27 = 0)")]
    Singular,
    #[error("all coordinates of the weighted point vanish")]
    AllZero,
    #[error("ratio residue undefined: {0}")]
    RatioUndefined(String),
    #[error("shape violation: {0}")]
    Shape(String),
    #[error("invariant I3 is not a unit after normalization")]
    I3NotUnit,
    #[error("not in the hyperelliptic case")]
    NotHyperelliptic,
    #[error("toggle model error: {0}")]
    Toggle(String),
}

pub type Result<T> = std::result::Result<T, Error>;
