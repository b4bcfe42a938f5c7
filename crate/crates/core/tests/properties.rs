//! Seeded property suites. Each oracle is computed by a route that shares no
//! code with the quantity under test beyond the polynomial arithmetic.

use std::sync::Arc;

use degenlab::groebner::{Ideal, MonomialIdeal};
use degenlab::harness::{oracle_triangle, Verdict};
use degenlab::poly::{Field, Monomial, PolyRing, Polynomial, TermOrder, WeightVector};
use degenlab::resolve::{betti_table, betti_via_koszul, invariants, monomial_hilbert_series};
use degenlab::simplicial::{
    asl_discrete_monomial_ideal, face_vectors, reduced_cohomology, sr_complex, sr_ideal, Poset, SimplicialComplex,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

const SEED: [u8; 32] = *b"degenlab-property-suite-seed-001";

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(Config { cases, failure_persistence: None, ..Config::default() }, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

fn check<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>)
where
    S::Value: std::fmt::Debug,
{
    if let Err(e) = runner(cases).run(&strategy, test) {
        panic!("{e}");
    }
}

// ---------- term orders ----------

const NV: usize = 4;

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..4, NV).prop_map(|e| Monomial::from_exponents(&e).unwrap())
}

fn orders() -> Vec<TermOrder> {
    vec![
        TermOrder::Lex,
        TermOrder::DegRevLex,
        TermOrder::weight_then(WeightVector(vec![1, 3, 0, 2]), TermOrder::Lex),
        TermOrder::block(2, TermOrder::DegRevLex, TermOrder::Lex),
    ]
}

#[test]
fn term_orders_are_multiplicative_well_orders() {
    let one = Monomial::default();
    check(10_000, (monomial(), monomial(), monomial()), |(a, b, c)| {
        for o in orders() {
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab == std::cmp::Ordering::Equal, a == b, "{} not total/antisymmetric", o);
            prop_assert_eq!(o.cmp(&b, &a), ab.reverse());
            prop_assert_ne!(o.cmp(&a, &one), std::cmp::Ordering::Less, "{} puts something below 1", o);
            prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab, "{} not multiplicative", o);
            if ab.is_le() && o.cmp(&b, &c).is_le() {
                prop_assert!(o.cmp(&a, &c).is_le(), "{} not transitive", o);
            }
        }
        Ok(())
    });
}

// ---------- polynomial ring ----------

fn poly(ring: Arc<PolyRing>, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = ring.nvars();
    prop::collection::vec((prop::collection::vec(0..=max_exp, n), -4i64..=4), 0..=max_terms).prop_map(move |ts| {
        let terms: Vec<(&[u32], i64)> = ts.iter().map(|(e, c)| (e.as_slice(), *c)).collect();
        Polynomial::from_int_terms(&ring, &terms)
    })
}

#[test]
fn polynomial_ring_axioms() {
    for field in [Field::Rationals, Field::prime(7).unwrap()] {
        let r = PolyRing::standard(3, field);
        let p = || poly(r.clone(), 2, 4);
        let zero = Polynomial::zero(&r);
        let one = Polynomial::one(&r);
        check(300, (p(), p(), p()), |(a, b, c)| {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &(-&a), zero.clone());
            prop_assert_eq!(&a * &one, a.clone());
            Ok(())
        });
    }
}

// ---------- Gröbner bases ----------

fn gb_strings(i: &Ideal, o: &TermOrder) -> Vec<String> {
    let mut v: Vec<String> = i.groebner_basis(o).elements().iter().map(|g| g.to_string()).collect();
    v.sort();
    v
}

#[test]
fn reduced_basis_depends_only_on_the_ideal() {
    let r = PolyRing::standard(3, Field::Rationals);
    let gens = prop::collection::vec(poly(r.clone(), 2, 3), 2..=3);
    check(48, (gens, poly(r.clone(), 1, 2)), |(gens, mult)| {
        let i = Ideal::new(&r, gens.clone());
        let mut rev = gens.clone();
        rev.reverse();
        // g0 + mult * g1 is redundant
        rev.push(&gens[0] + &(&mult * &gens[1]));
        let j = Ideal::new(&r, rev);
        for o in [TermOrder::Lex, TermOrder::DegRevLex] {
            prop_assert_eq!(gb_strings(&i, &o), gb_strings(&j, &o));
            let gb = i.groebner_basis(&o);
            for g in &gens {
                prop_assert!(i.contains(g).unwrap());
                let lm = g.leading_monomial(&o);
                if let Ok(lm) = lm {
                    prop_assert!(gb.initial_ideal().contains(&lm), "lead of a member outside in(I)");
                }
            }
        }
        Ok(())
    });
}

// ---------- resolutions ----------

fn monomial_ideal(n: usize, max_exp: u32) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=4)
        .prop_filter("not the unit ideal", |gs| gs.iter().all(|e| e.iter().any(|&x| x > 0)))
}

#[test]
fn koszul_strands_match_minimal_resolution() {
    let r = PolyRing::standard(4, Field::Rationals);
    check(24, monomial_ideal(4, 2), |gens| {
        let m = MonomialIdeal::new(&r, gens.iter().map(|e| Monomial::from_exponents(e).unwrap()).collect());
        let i = m.to_ideal();
        let b = betti_table(&i).unwrap();
        let top = b.entries().map(|((_, j), _)| j).max().unwrap_or(0);
        prop_assert_eq!(betti_via_koszul(&i, 0..=top).unwrap(), b);
        Ok(())
    });
}

// ---------- Stanley–Reisner ----------

fn complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(1u64..(1 << n), 1..=5)))
        .prop_map(|(n, masks)| {
            let facets: Vec<Vec<usize>> = masks.iter().map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect()).collect();
            SimplicialComplex::new(n, &facets).unwrap()
        })
        .prop_filter("not the full simplex", |d| d.facet_masks() != [(1u64 << d.n_vertices()) - 1])
}

#[test]
fn hochster_matches_local_duality() {
    check(24, complex(6), |delta| {
        let r = PolyRing::standard(delta.n_vertices(), Field::Rationals);
        let checks = oracle_triangle(&sr_ideal(&delta, &r).unwrap()).unwrap();
        for c in &checks {
            prop_assert_eq!(c.verdict, Verdict::Pass, "{} on {}: {}", c.name, delta, c.reason);
        }
        Ok(())
    });
}

#[test]
fn stanley_reisner_round_trip() {
    check(100, complex(7), |delta| {
        let r = PolyRing::standard(delta.n_vertices(), Field::Rationals);
        let m = sr_ideal(&delta, &r).unwrap();
        prop_assert!(m.is_squarefree());
        prop_assert_eq!(sr_complex(&m).unwrap(), delta.clone());
        prop_assert_eq!(sr_ideal(&sr_complex(&m).unwrap(), &r).unwrap(), m);
        Ok(())
    });
    let r = PolyRing::standard(5, Field::Rationals);
    check(100, monomial_ideal(5, 1), |gens| {
        let m = MonomialIdeal::new(&r, gens.iter().map(|e| Monomial::from_exponents(e).unwrap()).collect());
        prop_assert_eq!(sr_ideal(&sr_complex(&m).unwrap(), &r).unwrap(), m);
        Ok(())
    });
}

#[test]
fn h_vector_is_the_hilbert_numerator() {
    check(64, complex(6), |delta| {
        let r = PolyRing::standard(delta.n_vertices(), Field::Rationals);
        let m = sr_ideal(&delta, &r).unwrap();
        let h = monomial_hilbert_series(&m).h_polynomial().unwrap();
        let mut fv = face_vectors(&delta).h;
        while fv.last() == Some(&0) {
            fv.pop();
        }
        let got: Vec<i64> = (0..fv.len() as i64).map(|e| h.coeff(e) as i64).collect();
        prop_assert_eq!(got, fv.clone());
        prop_assert_eq!(h.high_degree().unwrap_or(0), fv.len() as i64 - 1);
        if invariants(&m.to_ideal()).unwrap().is_cohen_macaulay() {
            prop_assert!(fv.iter().all(|&x| x >= 0), "CM with negative h: {:?}", fv);
        }
        Ok(())
    });
}

#[test]
fn barycentric_subdivision_is_a_homeomorphism_invariant() {
    check(24, complex(4), |delta| {
        let sd = delta.barycentric_subdivision().unwrap();
        let dim = delta.dim().unwrap_or(-1);
        prop_assert_eq!(sd.dim(), delta.dim());
        for i in -1..=dim {
            prop_assert_eq!(
                reduced_cohomology(&sd, i, Field::Rationals),
                reduced_cohomology(&delta, i, Field::Rationals),
                "H~^{} of {}",
                i,
                delta
            );
        }
        if sd.n_vertices() <= 11 {
            let depth = |d: &SimplicialComplex| {
                let r = PolyRing::standard(d.n_vertices(), Field::Rationals);
                let inv = invariants(&sr_ideal(d, &r).unwrap().to_ideal()).unwrap();
                // depth minus dim is a topological invariant, dim is preserved
                inv.depth as i64 - inv.dim.unwrap_or(0) as i64
            };
            prop_assert_eq!(depth(&sd), depth(&delta), "depth of {}", delta);
        }
        Ok(())
    });
}

// ---------- ASL ----------

fn poset() -> impl Strategy<Value = Poset> {
    (2usize..=6).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        prop::sample::subsequence(pairs.clone(), 0..=pairs.len()).prop_map(move |rel| {
            Poset::new((1..=n).map(|i| format!("x{i}")).collect(), vec![1; n], &rel).unwrap()
        })
    })
}

#[test]
fn discrete_asl_is_the_order_complex_ideal() {
    check(64, poset(), |p| {
        let r = p.ring(Field::Rationals).unwrap();
        let asl = asl_discrete_monomial_ideal(&p, &r).unwrap();
        prop_assert_eq!(sr_ideal(&p.order_complex(), &r).unwrap(), asl.clone());
        prop_assert!(asl.generators().iter().all(|g| g.total_degree() == 2));
        Ok(())
    });
}
