use crate::poly::Field;
use crate::resolve::{HilbertSeries, Laurent};
use crate::simplicial::SimplicialComplex;

/// Coarse Hilbert series of `H^i_m(K[Δ])` in `u = t^{-1}`:
/// `sum_{σ ∈ Δ} dim H̃^{i-|σ|-1}(lk σ; K) (u / (1-u))^{|σ|}`.
///
/// Returned over the denominator `(1-u)^n`, so it compares directly with
/// [`LocalCohomologyTable::h_series`](super::LocalCohomologyTable::h_series).
pub fn hochster_table(delta: &SimplicialComplex, i: usize, field: Field) -> HilbertSeries {
    let n = delta.n_vertices();
    let mut num = Laurent::zero();
    for sigma in delta.faces() {
        let s = sigma.count_ones() as usize;
        if s > i {
            continue;
        }
        let c = delta.link(sigma).reduced_cohomology(i as i64 - s as i64 - 1, field);
        if c == 0 {
            continue;
        }
        // u^s (1-u)^{n-s}
        let mut term = Laurent::monomial(s as i64, c as i128);
        for _ in s..n {
            term = term.mul(&Laurent::one_minus(1));
        }
        num = num.add(&term);
    }
    HilbertSeries::new(num, vec![1; n])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_points() {
        let d = SimplicialComplex::new(2, &[vec![0], vec![1]]).unwrap();
        let h1 = hochster_table(&d, 1, Field::Rationals);
        assert_eq!(h1.numerator(), &Laurent::one_minus(2));
        assert_eq!(h1.coefficients(0, 3), vec![1, 2, 2, 2]);
        assert!(hochster_table(&d, 0, Field::Rationals).is_zero());
        assert!(hochster_table(&d, 2, Field::Rationals).is_zero());
    }

    #[test]
    fn simplex_is_the_polynomial_ring() {
        let n = 3;
        let d = SimplicialComplex::simplex(n);
        for i in 0..n {
            assert!(hochster_table(&d, i, Field::Rationals).is_zero());
        }
        // H^n(S) = u^n / (1-u)^n
        let top = hochster_table(&d, n, Field::Rationals);
        assert_eq!(top, HilbertSeries::new(Laurent::monomial(3, 1), vec![1; 3]));
    }

    #[test]
    fn path_is_cohen_macaulay() {
        let d = SimplicialComplex::new(4, &[vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        assert!(hochster_table(&d, 0, Field::Rationals).is_zero());
        assert!(hochster_table(&d, 1, Field::Rationals).is_zero());
        assert!(!hochster_table(&d, 2, Field::Rationals).is_zero());
    }
}
