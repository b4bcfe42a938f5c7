//! Stanley–Reisner combinatorics: complexes, cohomology, face vectors,
//! dual graphs and posets.

mod complex;
mod graph;
mod poset;

pub use complex::{
    face_vectors, is_f_vector, kruskal_katona, minimal_primes_squarefree, sr_complex, sr_ideal, Face, FaceVector,
    SimplicialComplex, MAX_VERTICES,
};
pub use graph::{dual_graph, dual_graph_of_primes, is_hirsch, squarefree_dual_graph, DualGraph};
pub use poset::{asl_discrete_ideal, asl_discrete_monomial_ideal, Poset};

use crate::poly::Field;

/// `dim H̃^i(Δ; K)`.
pub fn reduced_cohomology(delta: &SimplicialComplex, i: i64, field: Field) -> usize {
    delta.reduced_cohomology(i, field)
}

pub fn barycentric_subdivision(delta: &SimplicialComplex) -> Result<SimplicialComplex, crate::AlgebraError> {
    delta.barycentric_subdivision()
}
