//! Exact-arithmetic numerical semigroups.
//!
//! A numerical semigroup is a subset of N closed under addition, containing
//! 0, whose complement in N is finite. This crate provides:
//!
//! - [`semigroup`]: minimal generating systems, membership, Apéry sets,
//!   Frobenius number, genus, and symmetry
//! - [`constructions`]: two parametric families of symmetric semigroups
//!   built from concatenated arithmetic sequences, their closed-form Apéry
//!   sets and Frobenius numbers, and a per-instance verification bundle
//! - [`presentations`]: factorization enumeration, Betti elements, and
//!   minimal presentation cardinality via factorization graphs
//! - [`oracle`]: deliberately simple sieve-based reference implementations
//!   for cross-checking everything above
//!
//! All arithmetic is signed 64-bit and overflow-checked; overflow aborts
//! rather than wrapping.

pub mod constructions;
pub mod error;
pub mod oracle;
pub mod presentations;
pub mod semigroup;

pub use constructions::{Family, FamilyReport, ParamsS, ParamsT};
pub use error::Error;
pub use semigroup::{AperySet, GapProfile, NumericalSemigroup};
