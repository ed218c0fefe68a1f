//! Exact analysis of finite-dimensional evolution algebras.
//!
//! An evolution algebra has a natural basis `e_1..e_n` with `e_i e_j = 0` for
//! `i != j`, so it is determined by the squares `e_i^2`. The crate computes
//! the associated directed graph (edge `i -> j` when `e_j` occurs in `e_i^2`)
//! and relates hereditary and saturated vertex sets to ideals: absorption,
//! maximality, simplicity and quotients.
//!
//! All arithmetic is exact. Code is generic over a [`Field`]; the aliases
//! below fix it to the rationals or to a prime field.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod galois;
pub mod graph;
pub mod ideals;
pub mod linalg;
pub mod oracle;
pub mod scalar;
pub mod vertex_set;

pub use algebra::EvolutionAlgebra;
pub use error::{Error, Result};
pub use galois::{PropertyReport, SuiteConfig};
pub use graph::{Condensation, Digraph, GeneratingSet, DEFAULT_ENUMERATION_LIMIT};
pub use ideals::{Ideal, MaximalityCriterion};
pub use linalg::{rref, Subspace, Vector};
pub use scalar::{parse_scalar, Field, FieldDescriptor, PrimeField, Rationals, Scalar};
pub use vertex_set::VertexSet;

/// Largest supported algebra dimension; vertex sets are one machine word.
pub const MAX_DIM: usize = 64;

pub type RationalAlgebra = EvolutionAlgebra<Rationals>;
pub type PrimeAlgebra = EvolutionAlgebra<PrimeField>;
pub type RationalSubspace = Subspace<Rationals>;
pub type PrimeSubspace = Subspace<PrimeField>;
pub type RationalIdeal = Ideal<Rationals>;
pub type PrimeIdeal = Ideal<PrimeField>;
