//! Exact computational commutative algebra for Gröbner degenerations.
//!
//! The crate computes Gröbner bases and initial ideals, weight realizations
//! and flat families, graded free resolutions, Betti tables, Hilbert series
//! and graded local cohomology tables (through `Ext` and local duality), and
//! the Stanley–Reisner side of square-free monomial ideals. Everything is
//! exact: coefficients live in `Q` or in a prime field.

pub mod error;
pub mod poly;

pub use error::AlgebraError;
pub mod groebner;
pub mod linalg;
pub mod resolve;
pub mod simplicial;
pub mod cohom;
pub mod harness;
