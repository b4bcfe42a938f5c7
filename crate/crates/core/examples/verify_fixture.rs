//! Verifies the Gröbner degeneration of an ideal file and prints every check.
//!
//! ```text
//! cargo run --release --example verify_fixture -- fixtures/twisted_cubic.ideal
//! ```

use std::path::PathBuf;

use degenlab::harness::{parse_ideal_file, verify_file};

fn main() {
    let path: PathBuf = std::env::args().nth(1).unwrap_or_else(|| "fixtures/twisted_cubic.ideal".into()).into();
    let file = parse_ideal_file(&path, None).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let order = file.order_or_default();
    let rep = verify_file(&path.display().to_string(), &file, &order);
    println!("in(I) = ({})", rep.initial_ideal.join(", "));
    for c in &rep.checks {
        println!("{:<8} {:<20} {}", c.verdict.to_string(), c.name, c.reason);
    }
    for (stage, t) in &rep.timings {
        println!("  {stage}: {t:.2?}");
    }
}
