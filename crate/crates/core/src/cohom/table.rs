use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::ext::{ext_series_all_from, ExtSeries};
use crate::error::AlgebraError;
use crate::groebner::Ideal;
use crate::resolve::{free_resolution, FreeResolution, HilbertSeries};

/// `h^{ij}(S/I) = dim_K H^i_m(S/I)_j`, with the closed-form Ext series behind it.
///
/// Local duality: `h^{ij} = dim Ext^{n-i}(S/I, S)_{-j-D}` where `D` is the sum
/// of the variable degrees (`D = n` in the standard grading).
#[derive(Clone, Debug, Serialize)]
pub struct LocalCohomologyTable {
    pub n: usize,
    pub shift: i64,
    /// `exts[k]` is `Ext^k`, `0 <= k <= n`.
    pub exts: Vec<ExtSeries>,
    pub range: (i64, i64),
    /// Nonzero `h^{ij}` with `j` in `range`.
    #[serde(serialize_with = "entries_as_triples")]
    pub entries: BTreeMap<(usize, i64), u64>,
}

fn entries_as_triples<S: serde::Serializer>(e: &BTreeMap<(usize, i64), u64>, s: S) -> Result<S::Ok, S::Error> {
    e.iter().map(|(&(i, j), &h)| (i, j, h)).collect::<Vec<_>>().serialize(s)
}

impl LocalCohomologyTable {
    /// Builds the table from a minimal resolution of `S/I`.
    pub fn from_resolution(res: &FreeResolution, range: Option<(i64, i64)>) -> Result<Self, AlgebraError> {
        let ring = res.ring();
        let n = ring.nvars();
        let exts = ext_series_all_from(res)?;
        let reg = (0..=res.length())
            .flat_map(|k| res.degrees(k).iter().map(move |&a| a - k as i64))
            .max()
            .unwrap_or(0);
        let range = range.unwrap_or((-(n as i64 + reg), reg));
        let mut t = LocalCohomologyTable { n, shift: ring.canonical_shift(), exts, range, entries: BTreeMap::new() };
        for i in 0..=n {
            for j in range.0..=range.1 {
                let h = t.h(i, j);
                if h > 0 {
                    t.entries.insert((i, j), h);
                }
            }
        }
        Ok(t)
    }

    /// `h^{ij}` for any `(i, j)`, read off the closed form.
    pub fn h(&self, i: usize, j: i64) -> u64 {
        if i > self.n {
            return 0;
        }
        let c = self.exts[self.n - i].series.coefficient(-j - self.shift);
        u64::try_from(c).expect("Ext coefficients are certified non-negative")
    }

    /// `sum_j h^{ij} u^{-j}` as a rational function in `u = t^{-1}`.
    pub fn h_series(&self, i: usize) -> HilbertSeries {
        let e = &self.exts[self.n - i].series;
        e.shift(self.shift)
    }

    /// `true` iff `H^i_m(S/I) != 0`.
    pub fn is_nonzero(&self, i: usize) -> bool {
        i <= self.n && !self.exts[self.n - i].is_zero()
    }

    /// Smallest `i` with `H^i != 0`; `None` for the zero ring.
    pub fn depth(&self) -> Option<usize> {
        (0..=self.n).find(|&i| self.is_nonzero(i))
    }

    /// Largest `i` with `H^i != 0`.
    pub fn dim(&self) -> Option<usize> {
        (0..=self.n).rev().find(|&i| self.is_nonzero(i))
    }

    /// Krull dimension of `Ext^{n-i}`; `None` when it vanishes.
    pub fn ext_dimension(&self, i: usize) -> Option<usize> {
        self.exts[self.n - i].dimension()
    }

    /// Same closed-form Ext series for every `k`.
    pub fn same_series(&self, o: &LocalCohomologyTable) -> bool {
        self.n == o.n && self.exts.iter().zip(&o.exts).all(|(a, b)| a.series == b.series)
    }

    /// `h^{ij}(self) <= h^{ij}(o)` over both windows.
    pub fn is_bounded_by(&self, o: &LocalCohomologyTable) -> bool {
        let lo = self.range.0.min(o.range.0);
        let hi = self.range.1.max(o.range.1);
        (0..=self.n).all(|i| (lo..=hi).all(|j| self.h(i, j) <= o.h(i, j)))
    }
}

impl fmt::Display for LocalCohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.range;
        let cells: Vec<Vec<String>> = (0..=self.n)
            .map(|i| {
                (lo..=hi)
                    .map(|j| match self.h(i, j) {
                        0 => ".".to_string(),
                        h => h.to_string(),
                    })
                    .collect()
            })
            .collect();
        let width = (lo..=hi)
            .map(|j| j.to_string().len())
            .chain(cells.iter().flatten().map(|c| c.len()))
            .max()
            .unwrap_or(1);
        let label = format!("{}", self.n).len().max(3);
        write!(f, "{:>label$}", "i\\j")?;
        for j in lo..=hi {
            write!(f, " {j:>width$}")?;
        }
        for (i, row) in cells.iter().enumerate() {
            writeln!(f)?;
            write!(f, "{i:>label$}")?;
            for c in row {
                write!(f, " {c:>width$}")?;
            }
        }
        Ok(())
    }
}

/// Graded local cohomology of `S/I` by local duality.
pub fn local_cohomology_table(ideal: &Ideal, range: Option<(i64, i64)>) -> Result<LocalCohomologyTable, AlgebraError> {
    LocalCohomologyTable::from_resolution(&free_resolution(ideal)?, range)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, PolyRing};
    use crate::resolve::invariants;

    #[test]
    fn two_lines_meeting() {
        let r = PolyRing::from_names(&["x", "y"], Field::Rationals).unwrap();
        let t = local_cohomology_table(&Ideal::parse(&r, &["x*y"]).unwrap(), Some((-5, 2))).unwrap();
        assert_eq!(t.h(1, 0), 1);
        for j in -5..=-1 {
            assert_eq!(t.h(1, j), 2);
        }
        assert_eq!((t.h(1, 1), t.h(0, 0), t.h(2, -3)), (0, 0, 0));
        assert_eq!((t.depth(), t.dim()), (Some(1), Some(1)));
        assert!(t.to_string().starts_with("i\\j"));
    }

    #[test]
    fn artinian_h0_is_the_module() {
        let r = PolyRing::from_names(&["x", "y"], Field::Rationals).unwrap();
        let t = local_cohomology_table(&Ideal::parse(&r, &["x^2", "x*y", "y^3"]).unwrap(), None).unwrap();
        assert_eq!((t.h(0, 0), t.h(0, 1), t.h(0, 2), t.h(0, 3)), (1, 2, 1, 0));
        assert_eq!(t.dim(), Some(0));
    }

    #[test]
    fn twisted_cubic_depth_matches_resolution() {
        let r = PolyRing::standard(4, Field::Rationals);
        let i = Ideal::parse(&r, &["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"]).unwrap();
        let t = local_cohomology_table(&i, None).unwrap();
        assert!(!t.is_nonzero(0) && !t.is_nonzero(1) && t.is_nonzero(2));
        assert_eq!(t.depth(), Some(invariants(&i).unwrap().depth));
    }

    #[test]
    fn weighted_shift() {
        // S = K[x] with deg x = 2, S/(x): H^0 = K in degree 0
        let r = PolyRing::with_grading(vec!["x".into()], Field::Rationals, vec![2]).unwrap();
        let t = local_cohomology_table(&Ideal::parse(&r, &["x"]).unwrap(), Some((-4, 4))).unwrap();
        assert_eq!(t.entries, BTreeMap::from([((0, 0), 1)]));
        // S itself: H^1 lives in degrees -2, -4, ...
        let t = local_cohomology_table(&Ideal::zero(&r), Some((-6, 0))).unwrap();
        assert_eq!(t.entries, BTreeMap::from([((1, -6), 1), ((1, -4), 1), ((1, -2), 1)]));
    }
}
