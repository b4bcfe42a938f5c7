use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::hilbert::hilbert_series;
use super::resolution::{free_resolution, FreeResolution};
use crate::error::AlgebraError;
use crate::groebner::Ideal;

/// Graded Betti numbers `beta_{i,j}`, keyed by `(i, j)`. Zeros are not stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), u64>,
}

/// A nonzero `beta_{i,i+k}` with `beta_{h,h+l} = 0` for all `h >= i`,
/// `l >= k`, `(h, l) != (i, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ExtremalBetti {
    pub i: usize,
    pub k: i64,
    pub value: u64,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_resolution(res: &FreeResolution) -> Self {
        let mut t = BettiTable::new();
        for (i, ds) in res.all_degrees().iter().enumerate() {
            for &d in ds {
                t.add(i, d, 1);
            }
        }
        t
    }

    pub fn add(&mut self, i: usize, j: i64, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_default() += v;
        }
    }

    pub fn get(&self, i: usize, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), beta_{i,j})` in increasing `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, i64), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries.range((i, i64::MIN)..=(i, i64::MAX)).map(|(_, &v)| v).sum()
    }

    /// Projective dimension: the largest `i` with a nonzero entry.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `max { j - i : beta_{i,j} != 0 }`.
    pub fn regularity(&self) -> i64 {
        self.entries.keys().map(|&(i, j)| j - i as i64).max().unwrap_or(0)
    }

    pub fn extremal(&self) -> Vec<ExtremalBetti> {
        let cells: Vec<(usize, i64, u64)> = self.entries.iter().map(|(&(i, j), &v)| (i, j - i as i64, v)).collect();
        cells
            .iter()
            .filter(|&&(i, k, _)| !cells.iter().any(|&(h, l, _)| h >= i && l >= k && (h, l) != (i, k)))
            .map(|&(i, k, value)| ExtremalBetti { i, k, value })
            .collect()
    }

    /// Entrywise `self <= o`.
    pub fn is_bounded_by(&self, o: &BettiTable) -> bool {
        self.entries.iter().all(|(&(i, j), &v)| v <= o.get(i, j))
    }

    /// The entries with `j` in `lo..=hi`.
    pub fn restrict(&self, lo: i64, hi: i64) -> BettiTable {
        BettiTable { entries: self.entries.iter().filter(|(&(_, j), _)| lo <= j && j <= hi).map(|(&k, &v)| (k, v)).collect() }
    }

    /// `[[i, j, beta]]` triples for serialization.
    pub fn to_triples(&self) -> Vec<(usize, i64, u64)> {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v)).collect()
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_triples().serialize(s)
    }
}

/// Macaulay2 layout: columns `i`, rows `j - i`, dots for zeros.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "(zero)");
        }
        let pd = self.projective_dimension();
        let rows: Vec<i64> = {
            let lo = self.entries.keys().map(|&(i, j)| j - i as i64).min().unwrap_or(0);
            (lo..=self.regularity()).collect()
        };
        let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
        let width = (0..=pd)
            .map(|i| self.total(i).to_string().len().max(i.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = rows.iter().map(|r| r.to_string().len() + 1).max().unwrap_or(2).max("total:".len());
        write!(f, "{:>label$}", "")?;
        for i in 0..=pd {
            write!(f, " {i:>width$}")?;
        }
        writeln!(f)?;
        write!(f, "{:>label$}", "total:")?;
        for i in 0..=pd {
            write!(f, " {:>width$}", self.total(i))?;
        }
        for r in rows {
            writeln!(f)?;
            write!(f, "{:>label$}", format!("{r}:"))?;
            for i in 0..=pd {
                write!(f, " {:>width$}", cell(self.get(i, r + i as i64)))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.entries)
    }
}

/// Graded Betti numbers of `S/I` from its minimal resolution.
pub fn betti_table(ideal: &Ideal) -> Result<BettiTable, AlgebraError> {
    Ok(BettiTable::from_resolution(&free_resolution(ideal)?))
}

/// Numeric invariants of `S/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    /// Krull dimension; `None` for the zero ring.
    pub dim: Option<usize>,
    pub depth: usize,
    pub projective_dimension: usize,
    pub regularity: i64,
    pub extremal: Vec<ExtremalBetti>,
}

impl InvariantReport {
    pub fn is_cohen_macaulay(&self) -> bool {
        self.dim == Some(self.depth)
    }
}

/// Invariants read off the minimal resolution and the Hilbert series.
pub fn invariants(ideal: &Ideal) -> Result<InvariantReport, AlgebraError> {
    let res = free_resolution(ideal)?;
    let n = ideal.ring().nvars();
    let hs = hilbert_series(ideal)?;
    if res.euler_numerator() != *hs.numerator() {
        return Err(AlgebraError::Internal("Euler characteristic disagrees with the Hilbert series".into()));
    }
    let table = BettiTable::from_resolution(&res);
    let pd = table.projective_dimension();
    if pd > n {
        return Err(AlgebraError::Internal(format!("projective dimension {pd} exceeds {n}")));
    }
    // Auslander-Buchsbaum
    let depth = n - pd;
    let dim = hs.dimension();
    if dim.is_some_and(|d| depth > d) {
        return Err(AlgebraError::Internal(format!("depth {depth} exceeds dimension {dim:?}")));
    }
    Ok(InvariantReport { dim, depth, projective_dimension: pd, regularity: table.regularity(), extremal: table.extremal() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, PolyRing};

    #[test]
    fn principal_invariants() {
        let r = PolyRing::from_names(&["x", "y"], Field::Rationals).unwrap();
        let i = Ideal::parse(&r, &["x*y"]).unwrap();
        let t = betti_table(&i).unwrap();
        assert_eq!(t.to_triples(), vec![(0, 0, 1), (1, 2, 1)]);
        let inv = invariants(&i).unwrap();
        assert_eq!((inv.dim, inv.depth, inv.regularity), (Some(1), 1, 1));
        assert_eq!(inv.extremal, vec![ExtremalBetti { i: 1, k: 1, value: 1 }]);
    }

    #[test]
    fn twisted_cubic_table() {
        let r = PolyRing::from_names(&["x", "y", "z", "w"], Field::Rationals).unwrap();
        let i = Ideal::parse(&r, &["x*z - y^2", "x*w - y*z", "y*w - z^2"]).unwrap();
        let t = betti_table(&i).unwrap();
        assert_eq!(t.to_triples(), vec![(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
        assert_eq!(t.to_string(), "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2");
        let inv = invariants(&i).unwrap();
        assert!(inv.is_cohen_macaulay());
        assert_eq!(inv.dim, Some(2));
        let lex = i.initial_ideal(&crate::poly::TermOrder::Lex).to_ideal();
        assert_eq!(betti_table(&lex).unwrap(), t);
    }

    #[test]
    fn extremal_corners() {
        let mut t = BettiTable::new();
        t.add(0, 0, 1);
        t.add(1, 2, 3);
        t.add(1, 4, 1);
        t.add(2, 3, 2);
        t.add(2, 5, 1);
        // cells (i, j - i): (0,0) (1,1) (1,3) (2,1) (2,3)
        assert_eq!(t.extremal(), vec![ExtremalBetti { i: 2, k: 3, value: 1 }]);
    }
}
