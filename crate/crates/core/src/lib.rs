//! Monomial ideals, simplicial complexes and their combinatorial invariants:
//! linear quotients, polymatroidal and stable classes, variable and vertex
//! decomposability, multigraded Betti numbers and support-regularity.

#![allow(clippy::needless_range_loop)]

pub mod betti;
pub mod classes;
pub mod complex;
pub mod error;
pub mod harness;
pub mod io;
pub mod mono;
pub mod quotient;
pub mod report;

pub use betti::{betti_table, suppreg, BettiTable, Characteristic};
pub use classes::{SheddingTree, StabilityVariant};
pub use complex::{Face, SimplicialComplex};
pub use error::{Error, Result};
pub use harness::{AuditResult, GeneratorSpec};
pub use mono::{ExponentVector, IrreducibleIdeal, Monomial, MonomialIdeal, SignedMonomial};
pub use quotient::{GeneratorOrder, OrderConstraint};
pub use report::{PropertyReport, Verdict, Witness};
