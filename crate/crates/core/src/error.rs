use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("generator family mismatch: {left} vs {right}")]
    FamilyMismatch { left: String, right: String },
    #[error("no image supplied for generator {0}")]
    MissingImage(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("recursive coproduct left {0} terms containing X or Y")]
    ResidualLetters(usize),
    #[error("requested degree {requested} exceeds available order {available}")]
    OrderTooSmall { requested: usize, available: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
