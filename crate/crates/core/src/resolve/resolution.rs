//! Graded free resolutions: Schreyer frames, minimalization and syzygies.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::groebner::engine::{self, BuchbergerOptions, ModuleOrder, Quotient, Reducer, VPoly, VTerm};
use crate::groebner::{Ideal, MonomialIdeal};
use crate::poly::{Coeff, Monomial, PolyRing, Polynomial, TermOrder};

/// A sparse matrix of polynomials stored by columns. Column `k` is the image
/// of the `k`-th basis vector of the source.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: Vec<BTreeMap<usize, Polynomial>>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols: vec![BTreeMap::new(); cols] }
    }

    /// From dense columns, each of length `rows`.
    pub fn from_columns(rows: usize, columns: Vec<Vec<Polynomial>>) -> Self {
        let cols = columns
            .into_iter()
            .map(|c| {
                debug_assert_eq!(c.len(), rows);
                c.into_iter().enumerate().filter(|(_, p)| !p.is_zero()).collect()
            })
            .collect();
        Matrix { rows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&Polynomial> {
        self.cols[c].get(&r)
    }

    /// Nonzero entries of column `c` by row.
    pub fn column(&self, c: usize) -> &BTreeMap<usize, Polynomial> {
        &self.cols[c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        if p.is_zero() {
            self.cols[c].remove(&r);
        } else {
            self.cols[c].insert(r, p);
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.ncols(), self.nrows());
        for (c, col) in self.cols.iter().enumerate() {
            for (&r, p) in col {
                t.cols[r].insert(c, p.clone());
            }
        }
        t
    }

    /// `self * o`.
    pub fn mul(&self, o: &Matrix) -> Result<Matrix, AlgebraError> {
        if self.ncols() != o.nrows() {
            return Err(AlgebraError::Internal(format!("shape mismatch {}x{} * {}x{}", self.rows, self.ncols(), o.rows, o.ncols())));
        }
        let mut out = Matrix::zero(self.rows, o.ncols());
        for (k, col) in o.cols.iter().enumerate() {
            let mut acc: BTreeMap<usize, Polynomial> = BTreeMap::new();
            for (&j, q) in col {
                for (&i, p) in &self.cols[j] {
                    let prod = p.try_mul(q)?;
                    let e = match acc.remove(&i) {
                        Some(a) => a.try_add(&prod)?,
                        None => prod,
                    };
                    if !e.is_zero() {
                        acc.insert(i, e);
                    }
                }
            }
            out.cols[k] = acc;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// Whether any entry is a nonzero constant.
    pub fn has_unit(&self) -> bool {
        self.cols.iter().flat_map(|c| c.values()).any(|p| p.is_constant())
    }
}

/// A graded free resolution `0 <- F_0 <- F_1 <- ... <- F_l <- 0` of `S/I`.
///
/// `F_i = sum_j S(-a_ij)`; `degrees[i]` lists the `a_ij`.
/// `maps[i - 1]` is the differential `F_i -> F_{i-1}`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    ring: Arc<PolyRing>,
    degrees: Vec<Vec<i64>>,
    maps: Vec<Matrix>,
    minimal: bool,
}

impl FreeResolution {
    /// Checks shapes and homogeneity of every entry against the twists.
    pub fn new(ring: &Arc<PolyRing>, degrees: Vec<Vec<i64>>, maps: Vec<Matrix>) -> Result<Self, AlgebraError> {
        if degrees.len() != maps.len() + 1 {
            return Err(AlgebraError::Internal("one more free module than maps expected".into()));
        }
        for (i, m) in maps.iter().enumerate() {
            let (src, dst) = (&degrees[i + 1], &degrees[i]);
            if m.ncols() != src.len() || m.nrows() != dst.len() {
                return Err(AlgebraError::Internal(format!("map {} has the wrong shape", i + 1)));
            }
            for (c, col) in m.cols.iter().enumerate() {
                for (&r, p) in col {
                    let want = src[c] - dst[r];
                    if !p.is_homogeneous() || p.degree() != Some(want) {
                        return Err(AlgebraError::NotHomogeneous(format!("entry ({r}, {c}) of map {} should have degree {want}", i + 1)));
                    }
                }
            }
        }
        let minimal = maps.iter().all(|m| !m.has_unit());
        Ok(FreeResolution { ring: ring.clone(), degrees, maps, minimal })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// Length: index of the last nonzero free module.
    pub fn length(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn degrees(&self, i: usize) -> &[i64] {
        self.degrees.get(i).map(|d| d.as_slice()).unwrap_or(&[])
    }

    pub fn all_degrees(&self) -> &[Vec<i64>] {
        &self.degrees
    }

    pub fn rank(&self, i: usize) -> usize {
        self.degrees(i).len()
    }

    /// The differential `F_i -> F_{i-1}`, for `1 <= i <= length`.
    pub fn map(&self, i: usize) -> &Matrix {
        &self.maps[i - 1]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// `d_{i-1} d_i = 0` for every `i`.
    pub fn is_complex(&self) -> Result<bool, AlgebraError> {
        for w in self.maps.windows(2) {
            if !w[0].mul(&w[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `sum_i (-1)^i sum_j t^{a_ij}`: the numerator of `HS(S/I)`.
    pub fn euler_numerator(&self) -> crate::resolve::Laurent {
        let mut l = crate::resolve::Laurent::zero();
        for (i, ds) in self.degrees.iter().enumerate() {
            let s = if i % 2 == 0 { 1 } else { -1 };
            for &d in ds {
                l.add_term(d, s);
            }
        }
        l
    }
}

fn ensure_graded(ideal: &Ideal) -> Result<(), AlgebraError> {
    if !ideal.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous("resolutions need a graded ideal".into()));
    }
    if ideal.is_unit() {
        return Err(AlgebraError::Unsupported("the unit ideal has the zero quotient".into()));
    }
    Ok(())
}

/// One level of a Schreyer frame. Element `k` is a vector in the previous
/// free module, stored with total monomials `m * T_c`.
struct Level {
    elems: Vec<VPoly>,
    totals: Vec<Monomial>,
}

/// The Schreyer syzygies of a level whose elements form a Gröbner basis.
///
/// Element indices of a level are sorted by leading component, so the
/// Schreyer order on totals is `ModuleOrder::Ideal(base)`.
fn next_level(cur: &Level, order: &ModuleOrder) -> Result<Level, AlgebraError> {
    let m = cur.elems.len();
    let reducer = Reducer::new(order, &cur.elems, 0..m);
    let mut elems = Vec::new();
    let mut totals = Vec::new();
    for k in 0..m {
        let pk = cur.elems[k][0].0.comp;
        let tk = cur.totals[k];
        // minimal multipliers q = lcm(T_k, T_l) / T_k among l > k
        let mut cands: Vec<(Monomial, usize)> = Vec::new();
        for l in k + 1..m {
            if cur.elems[l][0].0.comp != pk {
                continue;
            }
            cands.push((tk.lcm(&cur.totals[l]).div_exact(&tk), l));
        }
        cands.sort_by(|a, b| a.0.total_degree().cmp(&b.0.total_degree()).then(a.1.cmp(&b.1)));
        let mut kept: Vec<(Monomial, usize)> = Vec::new();
        for (q, l) in cands {
            if !kept.iter().any(|(p, _)| p.divides(&q)) {
                kept.push((q, l));
            }
        }
        // deterministic order inside a parent: lex descending on q
        kept.sort_by(|a, b| b.0.cmp(&a.0));
        for (q, l) in kept {
            let ql = tk.mul(&q).div_exact(&cur.totals[l]);
            let one = cur.elems[k][0].1.one_like();
            let lhs = engine::mul_term(&cur.elems[k][1..], &q, &one);
            let s = engine::sub_mul(&lhs, &one, &ql, &cur.elems[l][1..], order);
            let mut quots: Vec<Quotient> = Vec::new();
            let rem = reducer.reduce(s, true, Some(&mut quots));
            if !rem.is_empty() {
                return Err(AlgebraError::Internal("Schreyer pair did not reduce to zero".into()));
            }
            let mut terms: Vec<(VTerm, Coeff)> = Vec::with_capacity(quots.len() + 2);
            terms.push((VTerm::new(tk.mul(&q), k as u32), one.clone()));
            terms.push((VTerm::new(cur.totals[l].mul(&ql), l as u32), one.neg()));
            for qu in quots {
                terms.push((VTerm::new(cur.totals[qu.index].mul(&qu.mono), qu.index as u32), qu.coeff.neg()));
            }
            let v = engine::normalize(terms, order);
            if v.first().map(|t| t.0) != Some(VTerm::new(tk.mul(&q), k as u32)) {
                return Err(AlgebraError::Internal("Schreyer syzygy has an unexpected leading term".into()));
            }
            totals.push(tk.mul(&q));
            elems.push(v);
        }
    }
    Ok(Level { elems, totals })
}

fn level_matrix(ring: &Arc<PolyRing>, level: &Level, prev_totals: &[Monomial]) -> Matrix {
    let mut cols = Vec::with_capacity(level.elems.len());
    for v in &level.elems {
        let mut by_row: BTreeMap<usize, Vec<(Monomial, Coeff)>> = BTreeMap::new();
        for (t, c) in v {
            let r = t.comp as usize;
            by_row.entry(r).or_default().push((t.mono.div_exact(&prev_totals[r]), c.clone()));
        }
        cols.push(by_row.into_iter().map(|(r, ts)| (r, Polynomial::from_terms(ring, ts))).collect());
    }
    Matrix { rows: prev_totals.len(), cols }
}

/// The Schreyer resolution of `S/I` built on the reduced Gröbner basis
/// under `order`. Usually not minimal.
pub fn schreyer_resolution(ideal: &Ideal, order: &TermOrder) -> Result<FreeResolution, AlgebraError> {
    ensure_graded(ideal)?;
    let ring = ideal.ring();
    let grading = ring.grading();
    let mo = ModuleOrder::Ideal(order.clone());
    let gb = ideal.groebner_basis(order);
    let mut degrees = vec![vec![0i64]];
    let mut maps = Vec::new();
    let mut prev_totals = vec![Monomial::one()];
    let mut level = Level { elems: gb.vecs().to_vec(), totals: gb.leading_monomials() };
    while !level.elems.is_empty() {
        maps.push(level_matrix(ring, &level, &prev_totals));
        degrees.push(level.totals.iter().map(|t| t.weighted_degree(grading)).collect());
        let next = next_level(&level, &mo)?;
        prev_totals = std::mem::take(&mut level.totals);
        level = next;
    }
    FreeResolution::new(ring, degrees, maps)
}

/// Cancels unit entries until none remain.
///
/// Pivot rule: within each map, the first unit in (row, column) order.
pub fn minimize(res: &FreeResolution) -> Result<FreeResolution, AlgebraError> {
    let len = res.length();
    let mut maps: Vec<Matrix> = res.maps.clone();
    let mut alive: Vec<Vec<bool>> = res.degrees.iter().map(|d| vec![true; d.len()]).collect();
    for i in 1..=len {
        loop {
            let m = &maps[i - 1];
            let mut pivot: Option<(usize, usize)> = None;
            for (c, col) in m.cols.iter().enumerate() {
                if !alive[i][c] {
                    continue;
                }
                for (&r, p) in col {
                    if alive[i - 1][r] && p.is_constant() && pivot.is_none_or(|(pr, pc)| (r, c) < (pr, pc)) {
                        pivot = Some((r, c));
                    }
                }
            }
            let Some((r, c)) = pivot else { break };
            let m = &mut maps[i - 1];
            let u = m.cols[c][&r].terms()[0].1.clone();
            let uinv = u.inv();
            let pivot_col = m.cols[c].clone();
            for b in 0..m.cols.len() {
                if b == c || !alive[i][b] {
                    continue;
                }
                let Some(f) = m.cols[b].get(&r).cloned() else { continue };
                let factor = f.scale(&uinv);
                for (&a, p) in &pivot_col {
                    let prod = factor.try_mul(p)?;
                    let e = match m.cols[b].remove(&a) {
                        Some(x) => x.try_sub(&prod)?,
                        None => prod.neg(),
                    };
                    if !e.is_zero() {
                        m.cols[b].insert(a, e);
                    }
                }
                debug_assert!(!m.cols[b].contains_key(&r));
            }
            alive[i][c] = false;
            alive[i - 1][r] = false;
            if i < len {
                for col in maps[i].cols.iter_mut() {
                    col.remove(&c);
                }
            }
        }
    }
    // compact
    let remap: Vec<Vec<Option<usize>>> = alive
        .iter()
        .map(|a| {
            let mut k = 0;
            a.iter()
                .map(|&x| {
                    x.then(|| {
                        k += 1;
                        k - 1
                    })
                })
                .collect()
        })
        .collect();
    let mut degrees: Vec<Vec<i64>> = res
        .degrees
        .iter()
        .zip(&alive)
        .map(|(d, a)| d.iter().zip(a).filter(|(_, &x)| x).map(|(&v, _)| v).collect())
        .collect();
    let mut out_maps = Vec::new();
    for (i, m) in maps.iter().enumerate() {
        let rows = degrees[i].len();
        let mut cols = Vec::new();
        for (c, col) in m.cols.iter().enumerate() {
            if remap[i + 1][c].is_none() {
                continue;
            }
            cols.push(col.iter().filter_map(|(&r, p)| remap[i][r].map(|nr| (nr, p.clone()))).collect());
        }
        out_maps.push(Matrix { rows, cols });
    }
    while degrees.len() > 1 && degrees.last().is_some_and(|d| d.is_empty()) {
        degrees.pop();
        out_maps.pop();
    }
    let out = FreeResolution::new(&res.ring, degrees, out_maps)?;
    debug_assert!(out.minimal);
    Ok(out)
}

/// The minimal graded free resolution of `S/I`.
pub fn free_resolution(ideal: &Ideal) -> Result<FreeResolution, AlgebraError> {
    let order = ideal.default_order();
    minimize(&schreyer_resolution(ideal, &order)?)
}

/// The Taylor resolution of `S/M`: the simplicial resolution on all subsets
/// of the generators. Exponential in the number of generators.
pub fn taylor_resolution(m: &MonomialIdeal) -> Result<FreeResolution, AlgebraError> {
    let ring = m.ring();
    let gens = m.generators();
    let r = gens.len();
    if r > 16 {
        return Err(AlgebraError::Unsupported("Taylor resolution with more than 16 generators".into()));
    }
    let grading = ring.grading();
    let lcm = |mask: u32| -> Monomial {
        (0..r).filter(|&k| mask >> k & 1 == 1).fold(Monomial::one(), |acc, k| acc.lcm(&gens[k]))
    };
    let mut subsets: Vec<Vec<u32>> = vec![Vec::new(); r + 1];
    for mask in 0u32..(1 << r) {
        subsets[mask.count_ones() as usize].push(mask);
    }
    let one = ring.field().one();
    let mut degrees = Vec::new();
    let mut maps = Vec::new();
    for (i, level) in subsets.iter().enumerate() {
        degrees.push(level.iter().map(|&s| lcm(s).weighted_degree(grading)).collect());
        if i == 0 {
            continue;
        }
        let index: BTreeMap<u32, usize> = subsets[i - 1].iter().enumerate().map(|(k, &s)| (s, k)).collect();
        let mut cols = Vec::new();
        for &s in level {
            let ls = lcm(s);
            let mut col = BTreeMap::new();
            let mut sign = false;
            for k in 0..r {
                if s >> k & 1 == 0 {
                    continue;
                }
                let t = s & !(1 << k);
                let coeff = if sign { one.neg() } else { one.clone() };
                col.insert(index[&t], Polynomial::monomial(ring, ls.div_exact(&lcm(t)), coeff));
                sign = !sign;
            }
            cols.push(col);
        }
        maps.push(Matrix { rows: subsets[i - 1].len(), cols });
    }
    FreeResolution::new(ring, degrees, maps)
}

/// Generators of the kernel of `S^m -> S^r`, `e_k -> rows[k]`.
///
/// `target_degrees` are the twists of `S^r`; every `rows[k]` must be
/// homogeneous for them. Returned syzygies are minimal generators, each
/// certified to map to zero.
pub fn syzygy_module(
    ring: &Arc<PolyRing>,
    target_degrees: &[i64],
    rows: &[Vec<Polynomial>],
    order: &TermOrder,
) -> Result<Vec<Vec<Polynomial>>, AlgebraError> {
    let r = target_degrees.len();
    let m = rows.len();
    let grading = ring.grading().to_vec();
    let mut src = Vec::with_capacity(m);
    for (k, row) in rows.iter().enumerate() {
        if row.len() != r {
            return Err(AlgebraError::Internal(format!("element {k} has {} entries, expected {r}", row.len())));
        }
        let mut deg = None;
        for (c, p) in row.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let d = p.degree().expect("nonzero") + target_degrees[c];
            if !p.is_homogeneous() || deg.is_some_and(|e| e != d) {
                return Err(AlgebraError::NotHomogeneous(format!("element {k} is not homogeneous")));
            }
            deg = Some(d);
        }
        src.push(deg.unwrap_or(0));
    }
    let shifts: Vec<i64> = target_degrees.iter().chain(&src).copied().collect();
    let mo = ModuleOrder::Graded { base: order.clone(), shifts, grading: grading.clone(), split: Some(r as u32) };
    let one = ring.field().one();
    let gens: Vec<VPoly> = rows
        .iter()
        .enumerate()
        .map(|(k, row)| {
            let mut terms: Vec<(VTerm, Coeff)> = vec![(VTerm::new(Monomial::one(), (r + k) as u32), one.clone())];
            for (c, p) in row.iter().enumerate() {
                terms.extend(p.terms().iter().map(|(mono, co)| (VTerm::new(*mono, c as u32), co.clone())));
            }
            engine::normalize(terms, &mo)
        })
        .collect();
    let gb = engine::buchberger(gens, &mo, &grading, &BuchbergerOptions::default());
    // elements free of the first r components, smallest degree first
    let mut kernel: Vec<VPoly> = gb.into_iter().filter(|v| v[0].0.comp as usize >= r).collect();
    kernel.sort_by_key(|v| mo.degree(&v[0].0, &grading));
    // drop generators already in the span of the earlier ones
    let mut kept: Vec<VPoly> = Vec::new();
    for v in kernel {
        if !kept.is_empty() {
            let basis = engine::buchberger(kept.clone(), &mo, &grading, &BuchbergerOptions::default());
            let red = Reducer::new(&mo, &basis, 0..basis.len());
            if red.reduce(v.clone(), true, None).is_empty() {
                continue;
            }
        }
        kept.push(v);
    }
    let mut out = Vec::with_capacity(kept.len());
    for v in kept {
        let mut coords: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); m];
        for (t, c) in v {
            coords[t.comp as usize - r].push((t.mono, c));
        }
        let syz: Vec<Polynomial> = coords.into_iter().map(|ts| Polynomial::from_terms(ring, ts)).collect();
        for c in 0..r {
            let mut acc = Polynomial::zero(ring);
            for (k, s) in syz.iter().enumerate() {
                acc = acc.try_add(&s.try_mul(&rows[k][c])?)?;
            }
            if !acc.is_zero() {
                return Err(AlgebraError::Internal("syzygy does not map to zero".into()));
            }
        }
        out.push(syz);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    fn ring(names: &[&str]) -> Arc<PolyRing> {
        PolyRing::from_names(names, Field::Rationals).unwrap()
    }

    fn ranks(r: &FreeResolution) -> Vec<usize> {
        (0..=r.length()).map(|i| r.rank(i)).collect()
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring(&["x", "y"]);
        let rows = vec![vec![r.var(0)], vec![r.var(1)]];
        let s = syzygy_module(&r, &[0], &rows, &TermOrder::DegRevLex).unwrap();
        assert_eq!(s.len(), 1);
        let y = Polynomial::parse(&r, "y").unwrap();
        assert!(s[0][0] == y || s[0][0] == y.neg());
        assert_eq!(s[0][1], s[0][0].neg().substitute(&[r.var(1), r.var(0)]).unwrap());
    }

    #[test]
    fn nonzerodivisor_has_no_syzygies() {
        let r = ring(&["x", "y"]);
        let f = Polynomial::parse(&r, "x^2 + y^2").unwrap();
        assert!(syzygy_module(&r, &[0], &[vec![f]], &TermOrder::DegRevLex).unwrap().is_empty());
    }

    #[test]
    fn twisted_cubic_syzygies_are_linear() {
        let r = ring(&["x", "y", "z", "w"]);
        let i = Ideal::parse(&r, &["x*z - y^2", "x*w - y*z", "y*w - z^2"]).unwrap();
        let rows: Vec<Vec<Polynomial>> = i.generators().iter().map(|g| vec![g.clone()]).collect();
        let s = syzygy_module(&r, &[0], &rows, &TermOrder::DegRevLex).unwrap();
        assert_eq!(s.len(), 2);
        for v in &s {
            assert!(v.iter().all(|p| p.is_zero() || p.degree() == Some(1)));
        }
        let res = free_resolution(&i).unwrap();
        assert_eq!(ranks(&res), vec![1, 3, 2]);
        assert_eq!(res.degrees(2), &[3, 3]);
        assert!(res.is_minimal() && res.is_complex().unwrap());
    }

    #[test]
    fn principal_and_powers() {
        let r = ring(&["x", "y"]);
        let res = free_resolution(&Ideal::parse(&r, &["x*y"]).unwrap()).unwrap();
        assert_eq!(res.all_degrees(), &[vec![0], vec![2]]);
        let res = free_resolution(&Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap()).unwrap();
        assert_eq!(res.all_degrees(), &[vec![0], vec![2, 2, 2], vec![3, 3]]);
    }

    #[test]
    fn minimize_keeps_minimal_input() {
        let r = ring(&["x", "y", "z"]);
        let res = free_resolution(&Ideal::parse(&r, &["x*y", "y*z"]).unwrap()).unwrap();
        let again = minimize(&res).unwrap();
        assert_eq!(res.all_degrees(), again.all_degrees());
        assert_eq!(res.maps(), again.maps());
    }

    #[test]
    fn minimize_removes_identity_padding() {
        let r = ring(&["x", "y"]);
        let one = Polynomial::one(&r);
        let x = r.var(0);
        // S <- S(-1) + S(-1) <- S(-1), second summand cancelled by the identity
        let d1 = Matrix::from_columns(1, vec![vec![x.clone()], vec![Polynomial::zero(&r)]]);
        let d2 = Matrix::from_columns(2, vec![vec![Polynomial::zero(&r), one]]);
        let padded = FreeResolution::new(&r, vec![vec![0], vec![1, 1], vec![1]], vec![d1, d2]).unwrap();
        assert!(!padded.is_minimal());
        let m = minimize(&padded).unwrap();
        assert_eq!(m.all_degrees(), &[vec![0], vec![1]]);
    }

    #[test]
    fn taylor_minimizes_to_betti_numbers() {
        let r = ring(&["x", "y", "z"]);
        let mi = MonomialIdeal::parse(&r, &["x*y", "y*z"]).unwrap();
        let t = taylor_resolution(&mi).unwrap();
        assert!(t.is_complex().unwrap());
        assert_eq!(ranks(&minimize(&t).unwrap()), vec![1, 2, 1]);
        let mi = MonomialIdeal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap();
        let t = taylor_resolution(&mi).unwrap();
        assert_eq!(ranks(&t), vec![1, 3, 3, 1]);
        assert_eq!(ranks(&minimize(&t).unwrap()), vec![1, 3, 2]);
    }

    #[test]
    fn euler_characteristic_matches_hilbert_series() {
        let r = ring(&["x", "y", "z", "w"]);
        let i = Ideal::parse(&r, &["x*z - y^2", "x*w - y*z", "y*w - z^2"]).unwrap();
        let res = schreyer_resolution(&i, &TermOrder::Lex).unwrap();
        assert!(res.is_complex().unwrap());
        let h = crate::resolve::hilbert_series(&i).unwrap();
        assert_eq!(&res.euler_numerator(), h.numerator());
    }
}
