//! Graded free resolutions, Betti tables, Hilbert series and the invariants
//! read off them.

mod betti;
mod hilbert;
mod koszul;
mod resolution;

pub use betti::{betti_table, invariants, BettiTable, ExtremalBetti, InvariantReport};
pub use hilbert::{hilbert_series, monomial_hilbert_series, HilbertSeries, Laurent};
pub use koszul::betti_via_koszul;
pub use resolution::{free_resolution, minimize, schreyer_resolution, syzygy_module, taylor_resolution, FreeResolution, Matrix};

pub(crate) use hilbert::quotient_numerator;
