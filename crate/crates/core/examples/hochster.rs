//! Local cohomology of a Stanley–Reisner ring two ways: from links (Hochster)
//! and from the minimal resolution (local duality). The complex is the
//! boundary of the octahedron with one facet removed, plus a loose edge.

use degenlab::cohom::{hochster_table, LocalCohomologyTable};
use degenlab::poly::{Field, PolyRing};
use degenlab::resolve::free_resolution;
use degenlab::simplicial::{face_vectors, sr_ideal, SimplicialComplex};

fn main() {
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                if (a, b, c) != (1, 3, 5) {
                    facets.push(vec![a, b, c]);
                }
            }
        }
    }
    facets.push(vec![5, 6]);
    let delta = SimplicialComplex::new(7, &facets).expect("valid complex");
    let ring = PolyRing::standard(7, Field::Rationals);
    let m = sr_ideal(&delta, &ring).expect("same vertex count");
    println!("Δ = {delta}\nI_Δ = {m}\n{:?}", face_vectors(&delta));

    let res = free_resolution(&m.to_ideal()).expect("resolution");
    let lc = LocalCohomologyTable::from_resolution(&res, Some((-3, 0))).expect("ext");
    println!("h^ij from duality:\n{lc}");
    for i in 0..=7 {
        let a = hochster_table(&delta, i, Field::Rationals);
        let b = lc.h_series(i);
        println!("H^{i}: {}  {}", a, if a == b { "agrees" } else { "DISAGREES" });
    }
}
