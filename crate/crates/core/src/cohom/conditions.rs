//! Depth-type conditions on `S/I` read off `e_i = dim Ext^{n-i}(S/I, S)`,
//! with `dim 0 = -inf`. Every test ranges over `i < dim S/I`.

use serde::Serialize;

use super::table::{local_cohomology_table, LocalCohomologyTable};
use crate::error::AlgebraError;
use crate::groebner::{Ideal, MonomialIdeal};
use crate::poly::TermOrder;
use crate::resolve::invariants;

/// Dimensions of the Ext modules of `S/I`, enough to decide every condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomProfile {
    pub n: usize,
    /// `None` for the zero ring.
    pub dim: Option<usize>,
    pub depth: Option<usize>,
    /// `ext_dims[i] = dim Ext^{n-i}(S/I, S)`.
    pub ext_dims: Vec<Option<usize>>,
}

impl CohomProfile {
    pub fn from_table(t: &LocalCohomologyTable) -> Self {
        CohomProfile { n: t.n, dim: t.dim(), depth: t.depth(), ext_dims: (0..=t.n).map(|i| t.ext_dimension(i)).collect() }
    }

    /// `e_i` satisfies `ok(i, e_i)` for every `i < dim` with `Ext^{n-i} != 0`.
    fn below_dim(&self, ok: impl Fn(usize, usize) -> bool) -> bool {
        let d = self.dim.unwrap_or(0);
        (0..d).all(|i| self.ext_dims[i].is_none_or(|e| ok(i, e)))
    }

    pub fn is_cohen_macaulay(&self) -> bool {
        self.dim == self.depth
    }

    /// All associated primes have the same dimension.
    pub fn is_pure(&self) -> bool {
        self.below_dim(|i, e| e < i)
    }

    /// `H^i_m` has finite length for `i < dim`. For square-free monomial
    /// ideals this is equivalent to Buchsbaum.
    pub fn is_generalized_cm(&self) -> bool {
        self.below_dim(|_, e| e == 0)
    }

    /// `(S/I)_p` is CM for every prime `p` of `S/I`-codimension below `c`.
    pub fn is_cm_in_codim(&self, c: usize) -> bool {
        self.below_dim(|_, e| e < c)
    }

    /// Serre's `(S_r)`; only meaningful for `r >= 2`, `None` otherwise.
    pub fn satisfies_serre(&self, r: usize) -> Option<bool> {
        (r >= 2).then(|| self.below_dim(|i, e| e + r <= i))
    }
}

/// Ext dimensions of `S/I`.
pub fn cohom_profile(ideal: &Ideal) -> Result<CohomProfile, AlgebraError> {
    Ok(CohomProfile::from_table(&local_cohomology_table(ideal, Some((0, 0)))?))
}

/// Serre's condition `(S_r)` on `S/I`.
///
/// `r >= 2` uses the Ext criterion. `(S_0)` always holds. `(S_1)` is decided
/// only when a square-free initial ideal (default order or lex) certifies that `I` is radical
/// (reduced rings satisfy `(S_1)`); otherwise it is reported as unsupported.
pub fn check_serre(ideal: &Ideal, r: usize) -> Result<bool, AlgebraError> {
    match r {
        0 => Ok(true),
        1 => {
            let orders = [ideal.default_order(), TermOrder::Lex];
            if orders.iter().any(|o| ideal.initial_ideal(o).is_squarefree()) {
                Ok(true)
            } else {
                Err(AlgebraError::Unsupported("(S_1) without a square-free initial ideal".into()))
            }
        }
        _ => Ok(cohom_profile(ideal)?.satisfies_serre(r).expect("r >= 2")),
    }
}

pub fn check_cm_codim(ideal: &Ideal, c: usize) -> Result<bool, AlgebraError> {
    Ok(cohom_profile(ideal)?.is_cm_in_codim(c))
}

pub fn check_generalized_cm(ideal: &Ideal) -> Result<bool, AlgebraError> {
    Ok(cohom_profile(ideal)?.is_generalized_cm())
}

pub fn is_pure(ideal: &Ideal) -> Result<bool, AlgebraError> {
    Ok(cohom_profile(ideal)?.is_pure())
}

/// `cd(S, M) = n - depth(S/M)` for square-free `M`.
pub fn cohomological_dimension_squarefree(m: &MonomialIdeal) -> Result<usize, AlgebraError> {
    if !m.is_squarefree() {
        return Err(AlgebraError::NotSquarefree(m.generator_strings().join(", ")));
    }
    let n = m.ring().nvars();
    Ok(n - invariants(&m.to_ideal())?.depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, PolyRing};
    use crate::simplicial::{sr_ideal, SimplicialComplex};

    fn cubic() -> Ideal {
        let r = PolyRing::standard(4, Field::Rationals);
        Ideal::parse(&r, &["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"]).unwrap()
    }

    #[test]
    fn cohen_macaulay_satisfies_everything() {
        let p = cohom_profile(&cubic()).unwrap();
        assert!(p.is_cohen_macaulay() && p.is_pure() && p.is_generalized_cm());
        for r in 2..6 {
            assert_eq!(p.satisfies_serre(r), Some(true));
        }
        for c in 0..4 {
            assert!(p.is_cm_in_codim(c));
        }
        assert!(check_serre(&cubic(), 1).unwrap());
    }

    #[test]
    fn segment_and_point() {
        let r = PolyRing::standard(3, Field::Rationals);
        let d = SimplicialComplex::new(3, &[vec![0, 1], vec![2]]).unwrap();
        let i = sr_ideal(&d, &r).unwrap().to_ideal();
        let p = cohom_profile(&i).unwrap();
        assert_eq!((p.dim, p.depth), (Some(2), Some(1)));
        assert!(!p.is_generalized_cm() && !p.is_pure());
        assert_eq!(p.satisfies_serre(2), Some(false));
        assert!(check_serre(&i, 1).unwrap());
    }

    #[test]
    fn two_planes_meeting_in_a_point() {
        // (x1,x2) ∩ (x3,x4): pure, not CM, Buchsbaum, fails S_2
        let r = PolyRing::standard(4, Field::Rationals);
        let i = Ideal::parse(&r, &["x1*x3", "x1*x4", "x2*x3", "x2*x4"]).unwrap();
        let p = cohom_profile(&i).unwrap();
        assert!(p.is_pure() && p.is_generalized_cm() && !p.is_cohen_macaulay());
        assert_eq!(p.satisfies_serre(2), Some(false));
        assert!(p.is_cm_in_codim(1) && !p.is_cm_in_codim(0));
    }

    #[test]
    fn s1_declined_for_non_radical_certificates() {
        let r = PolyRing::standard(2, Field::Rationals);
        let i = Ideal::parse(&r, &["x1^2", "x1*x2"]).unwrap();
        assert!(matches!(check_serre(&i, 1), Err(AlgebraError::Unsupported(_))));
        assert!(check_serre(&i, 0).unwrap());
    }

    #[test]
    fn cohomological_dimension() {
        let r = PolyRing::standard(5, Field::Rationals);
        let m = MonomialIdeal::parse(&r, &["x1", "x2", "x3"]).unwrap();
        assert_eq!(cohomological_dimension_squarefree(&m).unwrap(), 3);
        let r4 = PolyRing::standard(4, Field::Rationals);
        // in(x1 x4 - x2 x3) = (x1 x4)
        let m = MonomialIdeal::parse(&r4, &["x1*x4"]).unwrap();
        assert_eq!(cohomological_dimension_squarefree(&m).unwrap(), 1);
        let m = MonomialIdeal::parse(&r4, &["x1^2"]).unwrap();
        assert!(matches!(cohomological_dimension_squarefree(&m), Err(AlgebraError::NotSquarefree(_))));
    }
}
