//! Independent cross-checks for square-free monomial ideals: Hochster's
//! formula against local duality, Koszul strands against the minimal
//! resolution.

use std::ops::RangeInclusive;

use super::verify::Check;
use crate::cohom::{hochster_table, LocalCohomologyTable};
use crate::error::AlgebraError;
use crate::groebner::MonomialIdeal;
use crate::resolve::{betti_via_koszul, free_resolution, BettiTable};
use crate::simplicial::sr_complex;

/// Koszul strands over more variables than this are restricted to low degrees.
const FULL_KOSZUL_VARS: usize = 10;
const LOW_KOSZUL_DEGREE: i64 = 4;

/// Hochster/duality agreement for every `i` and Koszul/resolution agreement
/// on the Koszul window. The ideal is read in the standard grading.
pub fn oracle_triangle(m: &MonomialIdeal) -> Result<Vec<Check>, AlgebraError> {
    let ring = m.ring().standard_graded();
    let m = MonomialIdeal::new(&ring, m.generators().to_vec());
    let delta = sr_complex(&m)?;
    let n = ring.nvars();
    let ideal = m.to_ideal();
    let res = free_resolution(&ideal)?;
    let lc = LocalCohomologyTable::from_resolution(&res, Some((0, 0)))?;
    let bad: Vec<usize> = (0..=n).filter(|&i| hochster_table(&delta, i, ring.field()) != lc.h_series(i)).collect();
    let mut out = vec![Check::expect(
        "hochster-oracle",
        bad.is_empty(),
        if bad.is_empty() { format!("H^i agree for i = 0..{n}") } else { format!("disagree at i = {bad:?}") },
    )];
    let betti = BettiTable::from_resolution(&res);
    let window = koszul_window(n, &betti);
    let koszul = betti_via_koszul(&ideal, window.clone())?;
    let restricted = betti.restrict(*window.start(), *window.end());
    out.push(Check::expect(
        "koszul-oracle",
        koszul == restricted,
        format!("beta_ij for j in [{}, {}]", window.start(), window.end()),
    ));
    Ok(out)
}

fn koszul_window(n: usize, betti: &BettiTable) -> RangeInclusive<i64> {
    let top = betti.entries().map(|((_, j), _)| j).max().unwrap_or(0);
    if n <= FULL_KOSZUL_VARS {
        0..=top
    } else {
        0..=top.min(LOW_KOSZUL_DEGREE)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, PolyRing};

    #[test]
    fn two_skew_lines() {
        let r = PolyRing::standard(4, Field::Rationals);
        let m = MonomialIdeal::parse(&r, &["x1*x3", "x1*x4", "x2*x3", "x2*x4"]).unwrap();
        let checks = oracle_triangle(&m).unwrap();
        assert!(checks.iter().all(|c| c.verdict == super::super::Verdict::Pass), "{checks:?}");
    }
}
