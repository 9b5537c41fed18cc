//! Exact-arithmetic toolkit for polynomial identities of finite-dimensional
//! superalgebras.
//!
//! The crate computes, over the rationals and without any floating point:
//!
//! * graded codimension sequences `c_n`, central graded codimensions `c_n^z`
//!   and proper central codimensions `delta_n` of a Z2-graded algebra given
//!   by structure constants ([`eval`]),
//! * multilinear components of T2-ideals and T2-spaces generated by
//!   polynomials written in a small commutator DSL ([`t2`], [`polyspace`]),
//! * cocharacter decompositions (multiplicities of irreducible
//!   `S_{n-r} x S_r` characters on the multilinear quotients) ([`cochar`]),
//! * a replayable ledger of closed-form claims about the catalog algebras
//!   ([`fixtures`]).
//!
//! All linear algebra is exact ([`linalg`]); every result is deterministic
//! and independent of thread count.

pub mod algebra;
pub mod cochar;
pub mod error;
pub mod eval;
pub mod fixtures;
pub mod linalg;
pub mod polyspace;
pub mod t2;

pub use error::{Error, Result};
pub use linalg::{QMatrix, Rational, Subspace};
