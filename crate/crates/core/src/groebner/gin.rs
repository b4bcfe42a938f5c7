//! Probabilistic generic initial ideals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::basis::buchberger_truncated;
use super::ideal::Ideal;
use super::monomial_ideal::MonomialIdeal;
use crate::error::AlgebraError;
use crate::linalg;
use crate::poly::{Polynomial, TermOrder};

/// Entries of the random change of coordinates lie in `[-RANGE, RANGE]`.
pub const RANGE: i64 = 1_000_000;
pub const DEFAULT_TRIALS: usize = 3;

/// Options for [`generic_initial_ideal`].
#[derive(Clone, Debug)]
pub struct GinOptions {
    pub seed: u64,
    pub trials: usize,
    /// Compute only the generators of degree at most this (truncated bases).
    pub max_degree: Option<i64>,
}

impl Default for GinOptions {
    fn default() -> Self {
        GinOptions { seed: 0, trials: DEFAULT_TRIALS, max_degree: None }
    }
}

/// Applies `x_i -> sum_j a_ij x_j` to every generator.
pub fn change_coordinates(ideal: &Ideal, matrix: &[Vec<i64>]) -> Result<Ideal, AlgebraError> {
    let ring = ideal.ring();
    let field = ring.field();
    let images: Vec<Polynomial> = matrix
        .iter()
        .map(|row| {
            let terms = row
                .iter()
                .enumerate()
                .map(|(j, &a)| (crate::poly::Monomial::var(j), field.from_i64(a)))
                .collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect();
    let gens = ideal.generators().iter().map(|g| g.substitute(&images)).collect::<Result<Vec<_>, _>>()?;
    Ideal::try_new(ring, gens)
}

/// A random invertible matrix over the ring's field with entries in range.
pub fn random_coordinates(rng: &mut ChaCha8Rng, ideal: &Ideal) -> Vec<Vec<i64>> {
    let ring = ideal.ring();
    let n = ring.nvars();
    loop {
        let m: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-RANGE..=RANGE)).collect()).collect();
        let rows: Vec<Vec<(usize, crate::poly::Coeff)>> = m
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .map(|(j, &a)| (j, ring.field().from_i64(a)))
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();
        if linalg::rank(rows) == n {
            return m;
        }
    }
}

fn one_trial(ideal: &Ideal, order: &TermOrder, matrix: &[Vec<i64>], max_degree: Option<i64>) -> Result<MonomialIdeal, AlgebraError> {
    let moved = change_coordinates(ideal, matrix)?;
    match max_degree {
        None => Ok(moved.initial_ideal(order)),
        Some(d) => {
            let g = buchberger_truncated(moved.ring(), moved.generators(), order, d)?;
            Ok(g.initial_ideal())
        }
    }
}

/// `gin(I)` by random changes of coordinates; all trials must agree.
///
/// With `max_degree`, only the generators up to that degree are computed,
/// which is exact for homogeneous ideals under degree-compatible orders.
pub fn generic_initial_ideal(ideal: &Ideal, order: &TermOrder, opts: &GinOptions) -> Result<MonomialIdeal, AlgebraError> {
    if opts.max_degree.is_some() && !(order.is_degree_compatible() && ideal.generators().iter().all(|g| g.is_homogeneous())) {
        return Err(AlgebraError::Unsupported("truncated gin needs homogeneous input and a degree order".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut first: Option<MonomialIdeal> = None;
    for _ in 0..opts.trials.max(1) {
        let m = random_coordinates(&mut rng, ideal);
        let g = one_trial(ideal, order, &m, opts.max_degree)?;
        match &first {
            None => first = Some(g),
            Some(f) if *f == g => {}
            Some(_) => return Err(AlgebraError::GinUnstable),
        }
    }
    Ok(first.expect("at least one trial"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, PolyRing};

    #[test]
    fn rank_one_quadric() {
        let r = PolyRing::from_names(&["x", "y"], Field::Rationals).unwrap();
        let i = Ideal::parse(&r, &["(x+y)^2"]).unwrap();
        let g = generic_initial_ideal(&i, &TermOrder::DegRevLex, &GinOptions::default()).unwrap();
        assert_eq!(g, MonomialIdeal::parse(&r, &["x^2"]).unwrap());
    }

    #[test]
    fn seeded_runs_repeat() {
        let r = PolyRing::from_names(&["x", "y", "z"], Field::Rationals).unwrap();
        let i = Ideal::parse(&r, &["x*y", "y*z"]).unwrap();
        let o = GinOptions { seed: 7, ..Default::default() };
        let a = generic_initial_ideal(&i, &TermOrder::DegRevLex, &o).unwrap();
        let b = generic_initial_ideal(&i, &TermOrder::DegRevLex, &o).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, MonomialIdeal::parse(&r, &["x^2", "x*y"]).unwrap());
    }
}
