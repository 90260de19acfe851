use thiserror::Error;

/// Errors produced by the algebra engine and the invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("unknown identifier `{name}` at position {pos}")]
    UnknownIdentifier { name: String, pos: usize },

    #[error("exponent at position {pos} is not a non-negative integer literal")]
    BadExponent { pos: usize },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),

    #[error("empty generator list")]
    EmptyGenerators,

    #[error("the zero polynomial does not define a germ")]
    ZeroPolynomial,

    #[error("germ is not based at the origin: `{0}` has nonzero constant term")]
    NotAtOrigin(String),

    #[error("non-isolated singularity")]
    NonIsolated,

    #[error("{equations} equations exceed the {variables} ring variables")]
    TooManyEquations { equations: usize, variables: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("T^1 basis is not graded (no weights)")]
    NotGraded,

    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("missing value for parameter `{0}`")]
    MissingParameter(String),

    #[error("invalid family specification: {0}")]
    InvalidFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
