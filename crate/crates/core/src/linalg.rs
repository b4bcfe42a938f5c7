//! Exact sparse Gaussian elimination over the coefficient fields.

use std::collections::HashMap;

use crate::poly::Coeff;

/// A sparse row: `(column, value)` sorted by column, no zeros.
pub type SparseRow = Vec<(usize, Coeff)>;

/// Incremental row echelon form. Each pivot row is monic at its first column.
#[derive(Default)]
pub struct Echelon {
    pivots: HashMap<usize, SparseRow>,
}

fn axpy(a: &[(usize, Coeff)], s: &Coeff, b: &[(usize, Coeff)]) -> SparseRow {
    // a - s*b
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, b[j].1.mul(s).neg()));
            j += 1;
        } else {
            let v = a[i].1.sub(&b[j].1.mul(s));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the pivots; returns whether it was independent.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut r = row;
        let mut k = 0;
        while k < r.len() {
            let col = r[k].0;
            if let Some(p) = self.pivots.get(&col) {
                let s = r[k].1.clone();
                let tail = axpy(&r[k..], &s, p);
                r.truncate(k);
                r.extend(tail);
            } else {
                k += 1;
            }
        }
        if r.is_empty() {
            return false;
        }
        let inv = r[0].1.inv();
        for (_, c) in r.iter_mut() {
            *c = c.mul(&inv);
        }
        self.pivots.insert(r[0].0, r);
        true
    }
}

/// Rank of the matrix with the given rows.
pub fn rank(rows: Vec<SparseRow>) -> usize {
    let mut e = Echelon::new();
    for mut r in rows {
        r.sort_by_key(|t| t.0);
        r.retain(|t| !t.1.is_zero());
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    #[test]
    fn ranks() {
        let f = Field::Rationals;
        let row = |v: &[i64]| -> SparseRow {
            v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, f.from_i64(x))).collect()
        };
        assert_eq!(rank(vec![row(&[1, 2]), row(&[2, 4])]), 1);
        assert_eq!(rank(vec![row(&[1, -1, 0]), row(&[0, 1, -1]), row(&[-1, 0, 1])]), 2);
        let f3 = Field::Prime(3);
        let r3 = |v: &[i64]| -> SparseRow { v.iter().enumerate().map(|(i, &x)| (i, f3.from_i64(x))).filter(|t| !t.1.is_zero()).collect() };
        assert_eq!(rank(vec![r3(&[1, 1]), r3(&[1, 4])]), 1);
    }
}
