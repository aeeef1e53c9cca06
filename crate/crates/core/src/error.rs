use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty point list")]
    EmptyPointList,

    #[error("polyhedron is empty")]
    EmptyPolyhedron,

    #[error("polyhedron is unbounded")]
    Unbounded,

    #[error("polyhedron contains a line")]
    NotPointed,

    #[error("weight vector has a negative component; support is unbounded below")]
    UnboundedSupport,

    #[error("malformed linear program: {0}")]
    MalformedLp(String),

    #[error("ideal is not proper (contains the unit monomial)")]
    ImproperIdeal,

    #[error("ideal has no generators")]
    ZeroIdeal,

    #[error("negative weight in lambda")]
    NegativeLambda,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid resolution data: {0}")]
    InvalidResolution(String),

    #[error("exponent overflow")]
    Overflow,

    #[error("ideals do not agree modulo m^{0}")]
    TruncationMismatch(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
