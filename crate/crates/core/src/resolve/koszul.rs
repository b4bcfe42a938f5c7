//! Betti numbers as Koszul homology, strand by strand.
//!
//! `beta_{i,j} = dim H_i(K(x) (x) S/I)_j`. The strand `C_{i,j}` has basis
//! `m e_sigma` with `|sigma| = i` and `m` a standard monomial of degree
//! `j - deg sigma`; multiplication by a variable is reduced to normal form.

use std::collections::HashMap;
use std::ops::RangeInclusive;

use super::betti::BettiTable;
use crate::error::AlgebraError;
use crate::groebner::{GroebnerBasis, Ideal, MonomialIdeal};
use crate::linalg::{Echelon, SparseRow};
use crate::poly::{Coeff, Monomial, Polynomial};

/// Monomials of weighted degree `d` outside `lead`.
fn standard_monomials(n: usize, grading: &[u32], d: i64, lead: &MonomialIdeal) -> Vec<Monomial> {
    fn go(v: usize, n: usize, grading: &[u32], left: i64, cur: &mut Monomial, lead: &MonomialIdeal, out: &mut Vec<Monomial>) {
        if v == n {
            if left == 0 && !lead.contains(cur) {
                out.push(*cur);
            }
            return;
        }
        let w = grading[v] as i64;
        let mut e = 0;
        while e * w <= left {
            cur.set_exp(v, e as u32);
            if lead.contains(cur) {
                break;
            }
            go(v + 1, n, grading, left - e * w, cur, lead, out);
            e += 1;
        }
        cur.set_exp(v, 0);
    }
    let mut out = Vec::new();
    if d >= 0 {
        go(0, n, grading, d, &mut Monomial::one(), lead, &mut out);
    }
    out
}

struct Strands<'a> {
    n: usize,
    grading: Vec<u32>,
    gb: &'a GroebnerBasis,
    lead: MonomialIdeal,
    basis: HashMap<i64, (Vec<Monomial>, HashMap<Monomial, usize>)>,
    nf: HashMap<Monomial, Vec<(Monomial, Coeff)>>,
}

impl<'a> Strands<'a> {
    fn monomials(&mut self, d: i64) -> &(Vec<Monomial>, HashMap<Monomial, usize>) {
        let (n, grading, lead) = (self.n, &self.grading, &self.lead);
        self.basis.entry(d).or_insert_with(|| {
            let ms = standard_monomials(n, grading, d, lead);
            let idx = ms.iter().enumerate().map(|(k, m)| (*m, k)).collect();
            (ms, idx)
        })
    }

    fn normal_form(&mut self, m: Monomial) -> Result<Vec<(Monomial, Coeff)>, AlgebraError> {
        if let Some(v) = self.nf.get(&m) {
            return Ok(v.clone());
        }
        let p = Polynomial::monomial(self.gb.ring(), m, self.gb.ring().field().one());
        let v = self.gb.normal_form(&p)?.into_terms();
        self.nf.insert(m, v.clone());
        Ok(v)
    }

    fn sigma_degree(&self, s: u32) -> i64 {
        (0..self.n).filter(|&v| s >> v & 1 == 1).map(|v| self.grading[v] as i64).sum()
    }

    /// Subsets of size `i` with their offsets in the strand `C_{i,j}`.
    fn layout(&mut self, i: usize, j: i64) -> (Vec<(u32, usize)>, usize) {
        let mut out = Vec::new();
        let mut off = 0;
        for s in 0u32..(1u32 << self.n) {
            if s.count_ones() as usize != i {
                continue;
            }
            let d = j - self.sigma_degree(s);
            let len = self.monomials(d).0.len();
            if len > 0 {
                out.push((s, off));
                off += len;
            }
        }
        (out, off)
    }

    /// Rank of `C_{i,j} -> C_{i-1,j}`.
    fn rank(&mut self, i: usize, j: i64) -> Result<usize, AlgebraError> {
        if i == 0 || i > self.n {
            return Ok(0);
        }
        let (src, _) = self.layout(i, j);
        let (dst, _) = self.layout(i - 1, j);
        let dst_off: HashMap<u32, usize> = dst.into_iter().collect();
        let one = self.gb.ring().field().one();
        let mut ech = Echelon::new();
        for (s, _) in src {
            let d = j - self.sigma_degree(s);
            let ms = self.monomials(d).0.clone();
            for m in ms {
                let mut row: Vec<(usize, Coeff)> = Vec::new();
                let mut sign = one.clone();
                for v in 0..self.n {
                    if s >> v & 1 == 0 {
                        continue;
                    }
                    let t = s & !(1 << v);
                    let mut xm = m;
                    xm.set_exp(v, m.exp(v) + 1);
                    if let Some(&base) = dst_off.get(&t) {
                        let dd = j - self.sigma_degree(t);
                        for (mono, c) in self.normal_form(xm)? {
                            let k = self.monomials(dd).1[&mono];
                            row.push((base + k, c.mul(&sign)));
                        }
                    }
                    sign = sign.neg();
                }
                row.sort_by_key(|e| e.0);
                let mut merged: SparseRow = Vec::with_capacity(row.len());
                for (k, c) in row {
                    match merged.last_mut() {
                        Some((lk, lc)) if *lk == k => *lc = lc.add(&c),
                        _ => merged.push((k, c)),
                    }
                }
                merged.retain(|e| !e.1.is_zero());
                ech.insert(merged);
            }
        }
        Ok(ech.rank())
    }
}

/// `beta_{i,j}(S/I)` for `j` in `window`, by exact ranks of Koszul strands.
pub fn betti_via_koszul(ideal: &Ideal, window: RangeInclusive<i64>) -> Result<BettiTable, AlgebraError> {
    if !ideal.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous("Koszul strands need a graded ideal".into()));
    }
    let ring = ideal.ring();
    let n = ring.nvars();
    if n > 20 {
        return Err(AlgebraError::Unsupported("Koszul oracle above 20 variables".into()));
    }
    let gb = ideal.groebner_basis(&ideal.default_order());
    let mut st = Strands {
        n,
        grading: ring.grading().to_vec(),
        gb: &gb,
        lead: gb.initial_ideal(),
        basis: HashMap::new(),
        nf: HashMap::new(),
    };
    let mut table = BettiTable::new();
    for j in window {
        let mut ranks = vec![0usize; n + 2];
        for (i, r) in ranks.iter_mut().enumerate().take(n + 1).skip(1) {
            *r = st.rank(i, j)?;
        }
        for i in 0..=n {
            let (_, dim) = st.layout(i, j);
            let b = dim - ranks[i] - ranks[i + 1];
            table.add(i, j, b as u64);
        }
    }
    Ok(table)
}
