use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("a scheme of even type needs at least one oval")]
    EmptyEvenScheme,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("characteristic data is not integral: {0}")]
    NonIntegralCharData(String),

    #[error("vector is not {p}-characteristic at vertex {vertex}")]
    NotCharacteristic { p: u64, vertex: usize },

    #[error("vector is zero modulo {0}")]
    ZeroVector(u64),

    #[error("the link is empty (no arrows)")]
    EmptyLink,

    #[error("{0} is not an odd prime")]
    NonOddPrime(u64),

    #[error("residue mod {p} undefined: denominator {denominator} is divisible by {p}")]
    UndefinedResidue { p: u64, denominator: String },

    #[error("invariant is not an integer: {0}")]
    NonIntegralInvariant(String),

    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("scheme is not of even type")]
    NotEvenType,

    #[error("scheme has no ovals")]
    EmptyScheme,

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
