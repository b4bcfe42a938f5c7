//! Graded local cohomology through Ext and local duality, the Hochster
//! formula as an independent oracle, and Ext-dimension criteria.

mod conditions;
mod ext;
mod hochster;
mod table;

pub use conditions::{
    check_cm_codim, check_generalized_cm, check_serre, cohom_profile, cohomological_dimension_squarefree, is_pure,
    CohomProfile,
};
pub use ext::{ext_series, ext_series_all, ext_series_all_from, ExtSeries};
pub use hochster::hochster_table;
pub use table::{local_cohomology_table, LocalCohomologyTable};
