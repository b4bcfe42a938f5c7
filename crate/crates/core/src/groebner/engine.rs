//! Buchberger's algorithm over vectors of polynomials.
//!
//! An ideal is the rank-one case (every term in component 0). Terms are
//! `(monomial, component)` pairs; a [`ModuleOrder`] decides how they compare.
//! All stored basis elements are monic.

use std::cmp::Ordering;

use crate::poly::{Coeff, Monomial, TermOrder};

/// `m * e_comp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VTerm {
    pub mono: Monomial,
    pub comp: u32,
}

impl VTerm {
    pub fn new(mono: Monomial, comp: u32) -> Self {
        VTerm { mono, comp }
    }

    #[inline]
    pub fn divides(&self, o: &VTerm) -> bool {
        self.comp == o.comp && self.mono.divides(&o.mono)
    }
}

/// Terms sorted strictly decreasing under the active order, no zero coefficients.
pub type VPoly = Vec<(VTerm, Coeff)>;

/// Orders on the terms of a free module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleOrder {
    /// `base` on monomials; ties (equal monomials) go to the smaller component.
    ///
    /// With monomials read as total monomials `m * T_c`, this is also the
    /// Schreyer order of a frame whose ranks agree with component indices.
    Ideal(TermOrder),
    /// Term over position: shifted degree `deg m + shifts[c]`, then `base`,
    /// then the smaller component. Components below `split` (if any) are
    /// all greater than components at or above it.
    Graded {
        base: TermOrder,
        shifts: Vec<i64>,
        grading: Vec<u32>,
        split: Option<u32>,
    },
}

impl ModuleOrder {
    #[inline]
    pub fn cmp(&self, a: &VTerm, b: &VTerm) -> Ordering {
        match self {
            ModuleOrder::Ideal(o) => o.cmp(&a.mono, &b.mono).then_with(|| b.comp.cmp(&a.comp)),
            ModuleOrder::Graded { base, shifts, grading, split } => {
                if let Some(s) = split {
                    let (ba, bb) = (a.comp < *s, b.comp < *s);
                    if ba != bb {
                        return if ba { Ordering::Greater } else { Ordering::Less };
                    }
                }
                let da = a.mono.weighted_degree(grading) + shifts[a.comp as usize];
                let db = b.mono.weighted_degree(grading) + shifts[b.comp as usize];
                da.cmp(&db)
                    .then_with(|| base.cmp(&a.mono, &b.mono))
                    .then_with(|| b.comp.cmp(&a.comp))
            }
        }
    }

    /// Degree used for pair selection.
    pub fn degree(&self, t: &VTerm, grading: &[u32]) -> i64 {
        match self {
            ModuleOrder::Ideal(_) => t.mono.weighted_degree(grading),
            ModuleOrder::Graded { shifts, grading, .. } => {
                t.mono.weighted_degree(grading) + shifts[t.comp as usize]
            }
        }
    }

    fn is_rank_one(&self) -> bool {
        matches!(self, ModuleOrder::Ideal(_))
    }
}

/// Sorts and merges raw terms into a canonical [`VPoly`].
pub fn normalize(mut terms: Vec<(VTerm, Coeff)>, order: &ModuleOrder) -> VPoly {
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    let mut out: VPoly = Vec::with_capacity(terms.len());
    for (t, c) in terms {
        match out.last_mut() {
            Some((lt, lc)) if *lt == t => *lc = lc.add(&c),
            _ => out.push((t, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// `f - c * m * g`, all inputs sorted under `order`.
pub fn sub_mul(f: &[(VTerm, Coeff)], c: &Coeff, m: &Monomial, g: &[(VTerm, Coeff)], order: &ModuleOrder) -> VPoly {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let shifted = |t: &(VTerm, Coeff)| (VTerm::new(t.0.mono.mul(m), t.0.comp), t.1.mul(c));
    let mut gj = g.first().map(shifted);
    while i < f.len() {
        let Some((gt, gc)) = &gj else { break };
        match order.cmp(&f[i].0, gt) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((*gt, gc.neg()));
                j += 1;
                gj = g.get(j).map(shifted);
            }
            Ordering::Equal => {
                let s = f[i].1.sub(gc);
                if !s.is_zero() {
                    out.push((f[i].0, s));
                }
                i += 1;
                j += 1;
                gj = g.get(j).map(shifted);
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    if let Some((gt, gc)) = gj {
        out.push((gt, gc.neg()));
        for t in &g[j + 1..] {
            let (st, sc) = shifted(t);
            out.push((st, sc.neg()));
        }
    }
    out
}

pub fn mul_term(f: &[(VTerm, Coeff)], m: &Monomial, c: &Coeff) -> VPoly {
    f.iter().map(|(t, a)| (VTerm::new(t.mono.mul(m), t.comp), a.mul(c))).collect()
}

pub fn make_monic(f: &mut VPoly) {
    if let Some((_, lc)) = f.first() {
        if !lc.is_one() {
            let inv = lc.inv();
            for (_, c) in f.iter_mut() {
                *c = c.mul(&inv);
            }
        }
    }
}

/// One division step record: `coeff * mono * basis[index]` was subtracted.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub index: usize,
    pub mono: Monomial,
    pub coeff: Coeff,
}

/// Division by a list of monic vectors.
pub struct Reducer<'a> {
    pub order: &'a ModuleOrder,
    pub basis: &'a [VPoly],
    /// Indices of `basis` usable as divisors, grouped by leading component.
    by_comp: Vec<Vec<usize>>,
}

impl<'a> Reducer<'a> {
    pub fn new(order: &'a ModuleOrder, basis: &'a [VPoly], active: impl IntoIterator<Item = usize>) -> Self {
        let mut r = Reducer { order, basis, by_comp: Vec::new() };
        for k in active {
            r.add(k);
        }
        r
    }

    pub fn add(&mut self, k: usize) {
        let c = self.basis[k][0].0.comp as usize;
        if self.by_comp.len() <= c {
            self.by_comp.resize(c + 1, Vec::new());
        }
        self.by_comp[c].push(k);
    }

    #[inline]
    pub fn find(&self, t: &VTerm) -> Option<usize> {
        let list = self.by_comp.get(t.comp as usize)?;
        list.iter().copied().find(|&k| self.basis[k][0].0.mono.divides(&t.mono))
    }

    /// Reduces `f`. With `full`, every term is reduced; otherwise only the
    /// leading term. Each subtraction is appended to `quotients` if given.
    pub fn reduce(&self, f: VPoly, full: bool, mut quotients: Option<&mut Vec<Quotient>>) -> VPoly {
        let mut done: VPoly = Vec::new();
        let mut p = f;
        let mut start = 0;
        while start < p.len() {
            let (t, c) = (p[start].0, p[start].1.clone());
            match self.find(&t) {
                Some(k) => {
                    let g = &self.basis[k];
                    let m = t.mono.div_exact(&g[0].0.mono);
                    let mut next = sub_mul(&p[start + 1..], &c, &m, &g[1..], self.order);
                    if let Some(q) = quotients.as_deref_mut() {
                        q.push(Quotient { index: k, mono: m, coeff: c });
                    }
                    std::mem::swap(&mut p, &mut next);
                    start = 0;
                }
                None if full => {
                    done.push(p[start].clone());
                    start += 1;
                }
                None => {
                    done.extend_from_slice(&p[start..]);
                    return done;
                }
            }
        }
        done
    }
}

/// S-vector `(L/lt f) f - (L/lt g) g` for monic `f`, `g` in the same component.
pub fn s_vector(f: &VPoly, g: &VPoly, order: &ModuleOrder) -> VPoly {
    let (a, b) = (f[0].0.mono, g[0].0.mono);
    let l = a.lcm(&b);
    let ma = l.div_exact(&a);
    let mb = l.div_exact(&b);
    let one = f[0].1.one_like();
    let lhs = mul_term(&f[1..], &ma, &one);
    sub_mul(&lhs, &one, &mb, &g[1..], order)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: VTerm,
    degree: i64,
}

/// Options for [`buchberger`].
#[derive(Clone, Debug, Default)]
pub struct BuchbergerOptions {
    /// Pairs whose lcm has degree above the cap are never processed.
    pub degree_cap: Option<i64>,
}

/// Computes the reduced Gröbner basis of the submodule generated by `gens`.
///
/// Output is monic, inter-reduced and sorted increasingly by leading term.
/// With a degree cap the result is a Gröbner basis only up to that degree.
pub fn buchberger(gens: Vec<VPoly>, order: &ModuleOrder, grading: &[u32], opts: &BuchbergerOptions) -> Vec<VPoly> {
    let mut polys: Vec<VPoly> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<VPoly> = gens
        .into_iter()
        .map(|g| normalize(g, order))
        .filter(|g| !g.is_empty())
        .collect();
    input.sort_by(|a, b| {
        order
            .degree(&a[0].0, grading)
            .cmp(&order.degree(&b[0].0, grading))
            .then_with(|| order.cmp(&a[0].0, &b[0].0))
    });
    let mut queue: std::collections::VecDeque<VPoly> = input.into();

    loop {
        // Input generators are inserted in degree order, interleaved with pairs.
        let next_pair = pairs
            .iter()
            .enumerate()
            .filter(|(_, p)| opts.degree_cap.is_none_or(|d| p.degree <= d))
            .min_by(|(_, p), (_, q)| p.degree.cmp(&q.degree).then_with(|| order.cmp(&p.lcm, &q.lcm)))
            .map(|(k, p)| (k, p.degree));
        let next_input_deg = queue.front().map(|g| order.degree(&g[0].0, grading));
        let h = match (next_pair, next_input_deg) {
            (None, None) => break,
            (Some((_, pd)), Some(gd)) if gd <= pd => queue.pop_front().unwrap(),
            (None, Some(_)) => queue.pop_front().unwrap(),
            (Some((k, _)), _) => {
                let p = pairs.swap_remove(k);
                s_vector(&polys[p.i], &polys[p.j], order)
            }
        };
        let reducer = Reducer::new(order, &polys, active.iter().copied());
        let mut h = reducer.reduce(h, true, None);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        polys.push(h);
        let hi = polys.len() - 1;
        update(&polys, &mut active, &mut pairs, hi, order, grading);
    }

    // Minimalize, then inter-reduce.
    let mut basis: Vec<VPoly> = Vec::new();
    for &k in &active {
        let lt = polys[k][0].0;
        let redundant = active.iter().any(|&l| {
            l != k && {
                let ll = polys[l][0].0;
                ll.divides(&lt) && (ll != lt || l < k)
            }
        });
        if !redundant {
            basis.push(polys[k].clone());
        }
    }
    let n = basis.len();
    for k in 0..n {
        let others: Vec<usize> = (0..n).filter(|&l| l != k).collect();
        let head = basis[k][0].clone();
        let tail = basis[k][1..].to_vec();
        let reducer = Reducer::new(order, &basis, others);
        let mut reduced = vec![head];
        reduced.extend(reducer.reduce(tail, true, None));
        basis[k] = reduced;
    }
    basis.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    basis
}

/// Gebauer–Möller update after adding `polys[h]`.
fn update(polys: &[VPoly], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize, order: &ModuleOrder, grading: &[u32]) {
    let lh = polys[h][0].0;
    let rank_one = order.is_rank_one();
    let mk = |i: usize| {
        let li = polys[i][0].0;
        let lcm = VTerm::new(li.mono.lcm(&lh.mono), lh.comp);
        Pair { i, j: h, lcm, degree: order.degree(&lcm, grading) }
    };
    let coprime = |i: usize| rank_one && polys[i][0].0.mono.is_coprime(&lh.mono);

    let mut c: Vec<Pair> = active.iter().copied().filter(|&i| polys[i][0].0.comp == lh.comp).map(mk).collect();
    // Chain criterion among new pairs.
    let mut d: Vec<Pair> = Vec::new();
    while let Some(p) = c.pop() {
        let keep = coprime(p.i)
            || (!c.iter().any(|q| q.lcm.divides(&p.lcm)) && !d.iter().any(|q| q.lcm.divides(&p.lcm)));
        if keep {
            d.push(p);
        }
    }
    d.retain(|p| !coprime(p.i));
    // Old pairs made redundant by h.
    pairs.retain(|p| {
        if !lh.divides(&p.lcm) {
            return true;
        }
        let li = VTerm::new(polys[p.i][0].0.mono.lcm(&lh.mono), lh.comp);
        let lj = VTerm::new(polys[p.j][0].0.mono.lcm(&lh.mono), lh.comp);
        li == p.lcm || lj == p.lcm
    });
    pairs.extend(d);
    active.retain(|&g| !lh.divides(&polys[g][0].0));
    active.push(h);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    fn q(n: i64) -> Coeff {
        Field::Rationals.from_i64(n)
    }

    fn t(e: &[u32], comp: u32) -> VTerm {
        VTerm::new(Monomial::from_exponents(e).unwrap(), comp)
    }

    #[test]
    fn graded_order_with_split_puts_low_components_first() {
        let o = ModuleOrder::Graded {
            base: TermOrder::DegRevLex,
            shifts: vec![0, 0, 5],
            grading: vec![1, 1],
            split: Some(1),
        };
        assert_eq!(o.cmp(&t(&[0, 0], 0), &t(&[3, 3], 1)), Ordering::Greater);
        assert_eq!(o.cmp(&t(&[0, 0], 2), &t(&[1, 1], 1)), Ordering::Greater);
    }

    #[test]
    fn module_groebner_basis_reduces_pairs() {
        // Submodule of S^2 generated by (x, y) and (y, 0) over K[x, y].
        let o = ModuleOrder::Graded { base: TermOrder::DegRevLex, shifts: vec![0, 0], grading: vec![1, 1], split: None };
        let g1 = normalize(vec![(t(&[1, 0], 0), q(1)), (t(&[0, 1], 1), q(1))], &o);
        let g2 = normalize(vec![(t(&[0, 1], 0), q(1))], &o);
        let gb = buchberger(vec![g1, g2], &o, &[1, 1], &BuchbergerOptions::default());
        // y*(x,y) - x*(y,0) = (0, y^2) must appear.
        assert!(gb.iter().any(|g| g[0].0 == t(&[0, 2], 1)));
    }
}
