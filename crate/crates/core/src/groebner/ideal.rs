use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::basis::{buchberger, to_vpoly, GroebnerBasis};
use super::engine::{ModuleOrder, Quotient, Reducer};
use super::monomial_ideal::MonomialIdeal;
use crate::error::AlgebraError;
use crate::poly::{same_ring, Field, PolyRing, Polynomial, TermOrder};

/// An ideal given by generators, with reduced Gröbner bases cached per order.
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    cache: Mutex<HashMap<TermOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().expect("cache lock").clone();
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), cache: Mutex::new(cache) }
    }
}

impl Ideal {
    /// Zero generators are dropped. Panics if a generator lives elsewhere.
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Self {
        Self::try_new(ring, gens).expect("generators from another ring")
    }

    pub fn try_new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Self, AlgebraError> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(AlgebraError::RingMismatch);
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens, cache: Mutex::new(HashMap::new()) })
    }

    pub fn parse(ring: &Arc<PolyRing>, gens: &[&str]) -> Result<Self, AlgebraError> {
        let ps = gens.iter().map(|s| Polynomial::parse(ring, s)).collect::<Result<Vec<_>, _>>()?;
        Self::try_new(ring, ps)
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)])
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// The reduced Gröbner basis under `order`, computed once per order.
    pub fn groebner_basis(&self, order: &TermOrder) -> Arc<GroebnerBasis> {
        if let Some(g) = self.cache.lock().expect("cache lock").get(order) {
            return g.clone();
        }
        let g = Arc::new(buchberger(&self.ring, &self.gens, order).expect("generators share the ring"));
        self.cache.lock().expect("cache lock").entry(order.clone()).or_insert(g).clone()
    }

    /// Seeds the cache with a basis computed elsewhere.
    pub(crate) fn with_basis(self, g: GroebnerBasis) -> Self {
        self.cache.lock().expect("cache lock").insert(g.order().clone(), Arc::new(g));
        self
    }

    pub fn initial_ideal(&self, order: &TermOrder) -> MonomialIdeal {
        self.groebner_basis(order).initial_ideal()
    }

    /// A degree-compatible order for membership tests.
    pub fn default_order(&self) -> TermOrder {
        if self.ring.is_standard_graded() {
            TermOrder::DegRevLex
        } else {
            let w = self.ring.grading().iter().map(|&d| d as u64).collect();
            TermOrder::weight_then(crate::poly::WeightVector(w), TermOrder::DegRevLex)
        }
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, AlgebraError> {
        self.groebner_basis(&self.default_order()).contains(f)
    }

    pub fn contains_ideal(&self, o: &Ideal) -> Result<bool, AlgebraError> {
        let g = self.groebner_basis(&self.default_order());
        for f in &o.gens {
            if !g.contains(f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals (reduced bases agree).
    pub fn same_ideal(&self, o: &Ideal) -> bool {
        same_ring(&self.ring, &o.ring) && {
            let ord = self.default_order();
            self.groebner_basis(&ord).elements() == o.groebner_basis(&ord).elements()
        }
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis(&self.default_order()).is_unit()
    }

    /// Homogeneous for the ring grading.
    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
            || self.groebner_basis(&self.default_order()).elements().iter().all(|g| g.is_homogeneous())
    }

    /// A minimal homogeneous generating set, taken from the reduced basis.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>, AlgebraError> {
        if !self.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous("minimal generators need a graded ideal".into()));
        }
        let ord = self.default_order();
        let mut cands: Vec<Polynomial> = self.groebner_basis(&ord).elements().to_vec();
        cands.sort_by_key(|g| g.degree().unwrap_or(0));
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in cands {
            let d = g.degree().unwrap_or(0);
            let lower = super::basis::buchberger_truncated(&self.ring, &kept, &ord, d)?;
            if !lower.contains(&g)? {
                kept.push(g);
            }
        }
        Ok(kept)
    }

    pub fn sum(&self, o: &Ideal) -> Ideal {
        Ideal::new(&self.ring, self.gens.iter().chain(&o.gens).cloned().collect())
    }

    pub fn product(&self, o: &Ideal) -> Ideal {
        let mut gs = Vec::new();
        for a in &self.gens {
            for b in &o.gens {
                gs.push(a * b);
            }
        }
        Ideal::new(&self.ring, gs)
    }

    pub fn intersection(&self, o: &Ideal) -> Result<Ideal, AlgebraError> {
        ideal_intersection(self, o)
    }

    pub fn quotient(&self, o: &Ideal) -> Result<Ideal, AlgebraError> {
        ideal_quotient(self, o)
    }

    /// The same generators over another field (reducing rational coefficients).
    pub fn change_field(&self, field: Field) -> Result<Ideal, AlgebraError> {
        let r = self.ring.with_field(field)?;
        let gs = self.gens.iter().map(|g| g.change_field(&r)).collect::<Result<Vec<_>, _>>()?;
        Ideal::try_new(&r, gs)
    }

    /// The same generators in a ring with the same variables but another grading.
    pub fn regrade(&self, ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, self.gens.iter().map(|g| g.embed(ring)).collect())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gs: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gs.join(", "))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Moves `vars` to the front, keeping the relative order of the others.
fn front_permutation(n: usize, vars: &[usize]) -> Vec<usize> {
    let mut order: Vec<usize> = vars.to_vec();
    order.extend((0..n).filter(|i| !vars.contains(i)));
    // map[old] = new
    let mut map = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        map[old] = new;
    }
    map
}

/// `I ∩ K[x_i : i not in vars]`, via a block order with `vars` first.
pub fn eliminate(ideal: &Ideal, vars: &[usize]) -> Result<Ideal, AlgebraError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if vars.is_empty() {
        return Ok(ideal.clone());
    }
    if vars.iter().any(|&v| v >= n) {
        return Err(AlgebraError::InvalidRing("elimination variable out of range".into()));
    }
    let mut vs = vars.to_vec();
    vs.sort_unstable();
    vs.dedup();
    let map = front_permutation(n, &vs);
    let mut inv = vec![0; n];
    for (old, &new) in map.iter().enumerate() {
        inv[new] = old;
    }
    let names: Vec<String> = inv.iter().map(|&old| ring.names()[old].clone()).collect();
    let grading: Vec<u32> = inv.iter().map(|&old| ring.grading()[old]).collect();
    let work = PolyRing::with_grading(names, ring.field(), grading)?;
    let gens: Vec<Polynomial> = ideal.generators().iter().map(|g| g.map_vars(&work, &map)).collect();
    let order = TermOrder::block(vs.len(), TermOrder::DegRevLex, TermOrder::DegRevLex);
    let gb = buchberger(&work, &gens, &order)?;
    let block_mask: u32 = (1u32 << vs.len()) - 1;
    let kept = gb
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.support_mask() & block_mask == 0))
        .map(|g| g.map_vars(ring, &inv))
        .collect();
    Ok(Ideal::new(ring, kept))
}

/// `I ∩ J` as `(t I + (1 - t) J) ∩ K[x]`.
pub fn ideal_intersection(i: &Ideal, j: &Ideal) -> Result<Ideal, AlgebraError> {
    if !same_ring(i.ring(), j.ring()) {
        return Err(AlgebraError::RingMismatch);
    }
    let ring = i.ring();
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let ext = ring.extend(&["t"], &[1])?;
    let n = ring.nvars();
    let t = ext.var(n);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = Vec::new();
    for g in i.generators() {
        gens.push(&g.embed(&ext) * &t);
    }
    for g in j.generators() {
        gens.push(&g.embed(&ext) * &one_minus_t);
    }
    let e = eliminate(&Ideal::new(&ext, gens), &[n])?;
    let back: Vec<Polynomial> = e
        .generators()
        .iter()
        .map(|g| Polynomial::from_terms(ring, g.terms().to_vec()))
        .collect();
    Ok(Ideal::new(ring, back))
}

/// Exact quotient `h / g`, or `None` if `g` does not divide `h`.
pub fn divide_exact(h: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    if g.is_zero() {
        return None;
    }
    let order = ModuleOrder::Ideal(TermOrder::DegRevLex);
    let mut gv = to_vpoly(g, &order);
    let lc = gv[0].1.clone();
    super::engine::make_monic(&mut gv);
    let basis = vec![gv];
    let r = Reducer::new(&order, &basis, [0]);
    let mut qs: Vec<Quotient> = Vec::new();
    let rem = r.reduce(to_vpoly(h, &order), true, Some(&mut qs));
    if !rem.is_empty() {
        return None;
    }
    let inv = lc.inv();
    let terms: Vec<_> = qs.into_iter().map(|q| (q.mono, q.coeff.mul(&inv))).collect();
    Some(Polynomial::from_terms(h.ring(), terms))
}

/// `I : (g)`.
pub fn quotient_by(i: &Ideal, g: &Polynomial) -> Result<Ideal, AlgebraError> {
    let ring = i.ring();
    if g.is_zero() {
        return Ok(Ideal::unit(ring));
    }
    let inter = ideal_intersection(i, &Ideal::new(ring, vec![g.clone()]))?;
    let mut gens = Vec::new();
    for h in inter.generators() {
        gens.push(divide_exact(h, g).ok_or_else(|| AlgebraError::Internal("intersection with (g) not divisible by g".into()))?);
    }
    Ok(Ideal::new(ring, gens))
}

/// `I : J = ∩_g (I : g)` over the generators of `J`.
pub fn ideal_quotient(i: &Ideal, j: &Ideal) -> Result<Ideal, AlgebraError> {
    if !same_ring(i.ring(), j.ring()) {
        return Err(AlgebraError::RingMismatch);
    }
    let ring = i.ring();
    let mut acc: Option<Ideal> = None;
    for g in j.generators() {
        let q = quotient_by(i, g)?;
        acc = Some(match acc {
            None => q,
            Some(a) => ideal_intersection(&a, &q)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(ring)))
}

/// Whether `f` lies in the radical of `I`: `1 ∈ I + (1 - y f)`.
pub fn radical_membership(f: &Polynomial, i: &Ideal) -> Result<bool, AlgebraError> {
    if !same_ring(f.ring(), i.ring()) {
        return Err(AlgebraError::RingMismatch);
    }
    let ring = i.ring();
    let ext = ring.extend(&["y"], &[1])?;
    let y = ext.var(ring.nvars());
    let mut gens: Vec<Polynomial> = i.generators().iter().map(|g| g.embed(&ext)).collect();
    gens.push(&Polynomial::one(&ext) - &(&y * &f.embed(&ext)));
    Ok(buchberger(&ext, &gens, &TermOrder::DegRevLex)?.is_unit())
}
