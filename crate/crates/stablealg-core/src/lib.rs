//! Exact-arithmetic workbench for finite-dimensional algebras and their
//! stable-equivalence invariants.
//!
//! The crate builds algebras as structure constants over an exact field
//! (the rationals, or a prime field), either from a bound quiver, as the
//! centralizer of a matrix, as an endomorphism algebra, or by node-removal
//! surgery.  On top of that sit the homological operators (syzygies,
//! transpose, Auslander-Reiten translates, the Nakayama functor, almost
//! split sequences) and the invariants they feed: delooping levels,
//! Igusa-Todorov phi/psi dimensions, dominant and nu-dominant dimensions,
//! nu-stably projective modules and Frobenius parts, and node detection.
//!
//! All arithmetic is exact; nothing here rounds.  The crate is `no_std`
//! (with `alloc`) so the algorithmic layer stays free of platform concerns;
//! IO, file formats and the command-line front end live in the companion
//! `stablealg-cli` crate.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod decompose;
pub mod error;
pub mod field;
pub mod homology;
pub mod invariants;
pub mod matrix;
pub mod module;
pub mod poly;
pub mod prng;
pub mod quiver;
pub mod registry;
pub mod surgery;

pub use algebra::{Algebra, Ideal, Provenance};
pub use error::Error;
pub use field::{Field, PrimeField, Rationals};
pub use matrix::{IntMatrix, Matrix};
pub use module::{Module, Morphism};
pub use quiver::{Quiver, Relation};

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
