use thiserror::Error;

use crate::vertex_set::VertexSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed scalar {0:?}")]
    MalformedScalar(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("modulus {0} is not a prime at most 2^31")]
    NotPrime(u64),
    #[error("expected a vector of length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("dimension {0} is outside 1..={max}", max = crate::MAX_DIM)]
    InvalidDimension(usize),
    #[error("vertex {vertex} is out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex set {0:?} is not hereditary")]
    NotHereditary(VertexSet),
    #[error("subspace is not closed under multiplication by the algebra")]
    NotAnIdeal,
    #[error("the ideal is the whole algebra")]
    WholeAlgebra,
    #[error("the ideal is not maximal")]
    NotMaximal,
    #[error("enumeration would exceed the limit of {limit} sets")]
    EnumerationOverflow { limit: usize },
    #[error("exhaustive enumeration over {size} vectors exceeds the guard of {guard}")]
    GuardExceeded { size: u128, guard: u128 },
    #[error("no perfect algebra found after {attempts} attempts; density too low?")]
    SamplingExhausted { attempts: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}
