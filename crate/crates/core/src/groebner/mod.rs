//! Gröbner bases, initial ideals, ideal arithmetic and the degeneration
//! constructions: weights, homogenization and generic initial ideals.

mod basis;
pub mod engine;
mod gin;
mod ideal;
mod monomial_ideal;
mod weight;

pub use basis::{buchberger, buchberger_truncated, normal_form, GroebnerBasis};
pub use gin::{change_coordinates, generic_initial_ideal, GinOptions};
pub use ideal::{divide_exact, eliminate, ideal_intersection, ideal_quotient, quotient_by, radical_membership, Ideal};
pub use monomial_ideal::{is_squarefree, MonomialIdeal};
pub use weight::{certify_weight, homogenize_w, homogenize_w_with, initial_form, realize_weight, HomogenizedIdeal};

pub(crate) use monomial_ideal::minimalize;

use crate::poly::TermOrder;

/// Minimal generators of the leading-monomial ideal of the reduced basis.
pub fn initial_ideal(ideal: &Ideal, order: &TermOrder) -> MonomialIdeal {
    ideal.initial_ideal(order)
}
