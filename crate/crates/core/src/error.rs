use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by zero polynomial")]
    ZeroPolynomialDivision,
    #[error("pole at t=0")]
    PoleAtZero,
    #[error("pole at t={0}")]
    Pole(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("catalog error at {location}: {message}")]
    Catalog { location: String, message: String },
    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),
    #[error("parameter value {0} is outside the family domain (nonzero values only)")]
    FamilyDomain(String),
    #[error("curve not in G for generic t")]
    CurveNotInGroup,
    #[error("pole at t=0 in structure constant {0}")]
    LimitPole(String),
    #[error("limit left the variety: {0}")]
    LimitLeftVariety(String),
    #[error("soundness violation: {0}")]
    Soundness(String),
    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("JSON error in {path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
