//! Combinatorial commutative algebra of graphs and square-free monomial ideals.
//!
//! Edge ideals, Stanley-Reisner complexes, Alexander duals and minimal primes,
//! Betti tables via Hochster's formula, regularity, componentwise linearity,
//! sequential Cohen-Macaulayness, shellability, vertex decomposability and
//! the induced matching number. The [`fixtures`] and [`report`] modules rebuild
//! two known counterexamples about sequentially Cohen-Macaulay graphs and
//! check every claimed invariant mechanically.
//!
//! Linear algebra is generic over [`field::Field`]; [`F2`] and [`F32003`] are
//! the coefficient fields used by default.

pub mod betti;
pub mod complex;
pub mod decomp;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod graph;
pub mod homology;
pub mod hunt;
pub mod ideal;
pub mod io;
pub mod report;
pub mod vertex_set;

pub use betti::{BettiTable, Subject};
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use field::{Field, FieldSpec, Fp};
pub use graph::{Edge, EdgePair, Graph};
pub use ideal::{PrimeList, SqFreeIdeal};
pub use vertex_set::VertexSet;

/// The two-element field.
pub type F2 = Fp<2>;
/// The prime field of characteristic 32003.
pub type F32003 = Fp<32003>;

/// Crate version, embedded in every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
