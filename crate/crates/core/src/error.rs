use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidType(String),
    #[error("invalid diagram automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("invalid height function: {0}")]
    InvalidHeights(String),
    #[error("vertex {0} is not a source")]
    NotSource(usize),
    #[error("quiver is not fixed by the automorphism")]
    NotFixed,
    #[error("word is not reduced")]
    NotReduced,
    #[error("word does not represent the longest element")]
    NotLongest,
    #[error("words represent different group elements")]
    DifferentElements,
    #[error("not a root: {0:?}")]
    NotARoot(Vec<i64>),
    #[error("({0}, {1}) is not a vertex of the AR quiver")]
    OutsideQuiver(usize, i64),
    #[error("({0}, {1}) violates the parity condition")]
    Parity(usize, i64),
    #[error("method `{method}` does not apply: {reason}")]
    MethodMismatch { method: String, reason: String },
    #[error("exponent vectors have different weights")]
    WeightMismatch,
    #[error("enumeration budget exceeded: {count} vectors (cap {cap})")]
    Budget { count: u128, cap: u64 },
    #[error("head undefined: {0} simple vectors lie below the pair")]
    HeadUndefined(usize),
    #[error("not a pair: the second root precedes the first")]
    NotAPair,
    #[error("pair is not minimal for a positive root")]
    NotMinimal,
    #[error("unknown format `{0}`")]
    UnknownFormat(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
