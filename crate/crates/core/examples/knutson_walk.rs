//! Closure of the Knutson family of `f = g*h`, a cubic times a quadric,
//! printing where each member came from.

use degenlab::harness::fixtures::NON_CM_PRIME_KNUTSON;
use degenlab::harness::{knutson_closure, parse_ideal_text};
use degenlab::groebner::Ideal;

fn main() {
    let file = parse_ideal_text(NON_CM_PRIME_KNUTSON, None).expect("bundled fixture parses");
    let order = file.order_or_default();
    let seeds: Vec<Ideal> = file.seeds.iter().map(|g| Ideal::new(&file.ring, g.clone())).collect();
    let budget = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(25);
    let fam = knutson_closure(&file.generators[0], &order, &seeds, &[], budget).expect("lead of f is square-free");
    print!("{fam}");
    println!("sound: {}, exhausted: {}", fam.is_sound(), fam.budget_exhausted);
}
