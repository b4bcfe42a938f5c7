//! Exact sparse polynomials, coefficient fields and term orders.

mod coeff;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use coeff::{Coeff, Field, Rational};
pub use monomial::{Monomial, MAX_VARS};
pub use order::{TermOrder, WeightVector};
pub use polynomial::Polynomial;
pub use ring::PolyRing;

pub(crate) use ring::same_ring;

use std::cmp::Ordering;

/// Compares two monomials under `order`.
pub fn cmp_monomials(order: &TermOrder, a: &Monomial, b: &Monomial) -> Ordering {
    order.cmp(a, b)
}
