//! Fixture files, degeneration verification, Knutson closures and reports.

mod knutson;
mod oracle;
mod parse;
mod report;
mod suite;
mod verify;

pub use knutson::{knutson_closure, KnutsonFamily, KnutsonMember, Provenance};
pub use oracle::oracle_triangle;
pub use parse::{minors, parse_ideal_file, parse_ideal_text, IdealFile};
pub use report::{emit_report, exit_code, ReportFormat, Tally, REPORT_SCHEMA};
pub use suite::{
    binomial_edge_ideal, fence_poset, grid_poset, paper_fixtures, run_fixtures, run_paper_suite, verify_file, Fixture, SuiteOptions,
    DEFAULT_KNUTSON_BUDGET, DEFAULT_SEED, DEFAULT_TIMEOUT, GRAPHS,
};
pub use verify::{verify_degeneration, Check, Verdict, VerificationReport};

/// Bundled fixture texts, by file name.
pub mod fixtures {
    pub use super::suite::{
        CD_EXAMPLE, COORDINATE_PRODUCT, DETERMINANTAL_LEX, DETERMINANTAL_REVLEX, GENERIC_4X4, MINORS_2X3, NON_CM_PRIME,
        NON_CM_PRIME_KNUTSON, TWISTED_CUBIC, WEIGHTED_MINORS,
    };
}
