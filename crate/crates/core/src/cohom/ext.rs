//! Hilbert series of `Ext^k_S(S/I, S)` from the dual of the minimal resolution.
//!
//! `F_k^* = sum_j S(a_kj)`. With `B_k = im(d_k^*) ⊆ F_k^*`, graded rank-nullity
//! gives `HS(Ext^k) = HS(F_k^*) - HS(B_{k+1}) - HS(B_k)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::AlgebraError;
use crate::groebner::engine::{self, BuchbergerOptions, ModuleOrder, VTerm};
use crate::groebner::Ideal;
use crate::poly::{Monomial, TermOrder};
use crate::resolve::{free_resolution, quotient_numerator, FreeResolution, HilbertSeries, Laurent};

/// `HS(Ext^k_S(S/I, S))` as an exact rational function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtSeries {
    pub k: usize,
    pub series: HilbertSeries,
}

impl ExtSeries {
    /// Krull dimension of the Ext module; `None` when it vanishes.
    pub fn dimension(&self) -> Option<usize> {
        self.series.dimension()
    }

    pub fn is_zero(&self) -> bool {
        self.series.is_zero()
    }
}

impl Serialize for ExtSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            k: usize,
            numerator: Vec<(i64, String)>,
            denominator: Vec<u32>,
            dimension: Option<usize>,
        }
        Repr {
            k: self.k,
            numerator: self.series.numerator().terms().map(|(e, c)| (e, c.to_string())).collect(),
            denominator: self.series.denominator().to_vec(),
            dimension: self.dimension(),
        }
        .serialize(s)
    }
}

/// `HS(im d_k^*)`, the submodule of `F_k^*` spanned by the rows of `d_k`.
fn dual_image(res: &FreeResolution, k: usize, order: &TermOrder) -> Laurent {
    if k == 0 || k > res.length() {
        return Laurent::zero();
    }
    let ring = res.ring();
    let grading = ring.grading().to_vec();
    let d = res.map(k).transpose();
    let shifts: Vec<i64> = res.degrees(k).iter().map(|a| -a).collect();
    let mo = ModuleOrder::Graded { base: order.clone(), shifts: shifts.clone(), grading: grading.clone(), split: None };
    let gens: Vec<_> = (0..d.ncols())
        .map(|c| {
            let terms = d
                .column(c)
                .iter()
                .flat_map(|(&b, p)| p.terms().iter().map(move |(m, co)| (VTerm::new(*m, b as u32), co.clone())))
                .collect();
            engine::normalize(terms, &mo)
        })
        .filter(|v: &engine::VPoly| !v.is_empty())
        .collect();
    if gens.is_empty() {
        return Laurent::zero();
    }
    let gb = engine::buchberger(gens, &mo, &grading, &BuchbergerOptions::default());
    let mut leads: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
    for v in &gb {
        leads.entry(v[0].0.comp).or_default().push(v[0].0.mono);
    }
    // HS(B) = sum_b t^{s_b} (HS(S) - HS(S/L_b))
    let mut out = Laurent::zero();
    for (b, ls) in leads {
        out = out.add(&Laurent::one().sub(&quotient_numerator(ls, &grading)).shift(shifts[b as usize]));
    }
    out
}

/// All `Ext^k`, `0 <= k <= n`, from one minimal resolution.
///
/// `Ext^k` vanishes for `k < c = n - dim S/I` and `k > pd`, so the dual
/// complex is exact below `c` and `HS(B_k)` for `k <= c` follows from
/// rank-nullity alone. Module Gröbner bases are needed only for `c < k <= pd`.
pub fn ext_series_all_from(res: &FreeResolution) -> Result<Vec<ExtSeries>, AlgebraError> {
    let ring = res.ring();
    let n = ring.nvars();
    let den = ring.grading().to_vec();
    let pd = res.length();
    let dual = |k: usize| -> Laurent {
        let mut f = Laurent::zero();
        for &a in res.degrees(k) {
            f.add_term(-a, 1);
        }
        f
    };
    let zero = || HilbertSeries::new(Laurent::zero(), den.clone());
    let Some(dim) = HilbertSeries::new(res.euler_numerator(), den.clone()).dimension() else {
        return Ok((0..=n).map(|k| ExtSeries { k, series: zero() }).collect());
    };
    let c = n - dim;
    let mut images = vec![Laurent::zero(); n + 2];
    for k in 1..=c.min(pd) {
        // exact at k - 1 < c: B_k = F_{k-1}^* / B_{k-1}
        images[k] = dual(k - 1).sub(&images[k - 1]);
    }
    let hard: Vec<usize> = (c + 1..=pd).collect();
    // one module GB per k, independent of each other
    let computed: Vec<Laurent> = std::thread::scope(|sc| {
        let hs: Vec<_> = hard.iter().map(|&k| sc.spawn(move || dual_image(res, k, &TermOrder::DegRevLex))).collect();
        hs.into_iter().map(|h| h.join().expect("dual image worker panicked")).collect()
    });
    for (&k, b) in hard.iter().zip(computed) {
        images[k] = b;
    }
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let num = dual(k).sub(&images[k + 1]).sub(&images[k]);
        let series = HilbertSeries::new(num, den.clone());
        certify_nonnegative(&series, k)?;
        out.push(ExtSeries { k, series });
    }
    if out[c].is_zero() {
        return Err(AlgebraError::Internal(format!("Ext^{c} vanishes below the dimension bound")));
    }
    Ok(out)
}

fn certify_nonnegative(s: &HilbertSeries, k: usize) -> Result<(), AlgebraError> {
    let Some(lo) = s.numerator().low_degree() else { return Ok(()) };
    let hi = s.numerator().high_degree().unwrap_or(lo) + s.denominator().len() as i64 + 1;
    if let Some(c) = s.coefficients(lo, hi).into_iter().find(|&c| c < 0) {
        return Err(AlgebraError::Internal(format!("Ext^{k} series has a negative coefficient {c}")));
    }
    Ok(())
}

/// `Ext^k_S(S/I, S)` for every `k <= n`.
pub fn ext_series_all(ideal: &Ideal) -> Result<Vec<ExtSeries>, AlgebraError> {
    ext_series_all_from(&free_resolution(ideal)?)
}

/// `HS(Ext^k_S(S/I, S))`.
pub fn ext_series(ideal: &Ideal, k: usize) -> Result<ExtSeries, AlgebraError> {
    let n = ideal.ring().nvars();
    if k > n {
        return Ok(ExtSeries { k, series: HilbertSeries::new(Laurent::zero(), ideal.ring().grading().to_vec()) });
    }
    Ok(ext_series_all(ideal)?.swap_remove(k))
}
