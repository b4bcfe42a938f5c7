use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::coeff::Coeff;
use super::monomial::Monomial;
use super::order::TermOrder;
use super::ring::{same_ring, PolyRing};
use crate::error::AlgebraError;

/// A polynomial in a [`PolyRing`].
///
/// Terms are kept in strictly decreasing lex order with nonzero
/// coefficients, which makes the representation canonical.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Coeff)>,
}

/// Sorts by monomial (descending under `order`) and merges duplicates.
pub(crate) fn normalize_terms(
    mut terms: Vec<(Monomial, Coeff)>,
    order: &TermOrder,
) -> Vec<(Monomial, Coeff)> {
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
            _ => out.push((m, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// Merges two term lists sorted descending under `order`, computing `f + s*g`.
pub(crate) fn merge_add(
    f: &[(Monomial, Coeff)],
    g: &[(Monomial, Coeff)],
    scale: Option<&Coeff>,
    order: &TermOrder,
) -> Vec<(Monomial, Coeff)> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let scaled = |c: &Coeff| match scale {
        Some(s) => c.mul(s),
        None => c.clone(),
    };
    while i < f.len() && j < g.len() {
        match order.cmp(&f[i].0, &g[j].0) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let c = scaled(&g[j].1);
                if !c.is_zero() {
                    out.push((g[j].0, c));
                }
                j += 1;
            }
            Ordering::Equal => {
                let c = f[i].1.add(&scaled(&g[j].1));
                if !c.is_zero() {
                    out.push((f[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    for t in &g[j..] {
        let c = scaled(&t.1);
        if !c.is_zero() {
            out.push((t.0, c));
        }
    }
    out
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coeff) -> Self {
        Self::monomial(ring, Monomial::one(), c)
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Coeff) -> Self {
        assert!(ring.field().contains(&c), "coefficient from the wrong field");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.iter().all(|(_, c)| ring.field().contains(c)));
        Polynomial { ring: ring.clone(), terms: normalize_terms(terms, &TermOrder::Lex) }
    }

    /// Builds from `(exponents, integer coefficient)` pairs.
    pub fn from_int_terms(ring: &Arc<PolyRing>, terms: &[(&[u32], i64)]) -> Self {
        let f = ring.field();
        let ts = terms
            .iter()
            .map(|(e, c)| (Monomial::from_exponents(e).expect("exponents"), f.from_i64(*c)))
            .collect();
        Self::from_terms(ring, ts)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// Terms in decreasing lex order.
    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Terms sorted in decreasing order under `order`.
    pub fn sorted_terms(&self, order: &TermOrder) -> Vec<(Monomial, Coeff)> {
        if *order == TermOrder::Lex {
            return self.terms.clone();
        }
        let mut t = self.terms.clone();
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        t
    }

    /// The largest term under `order`.
    pub fn leading_term(&self, order: &TermOrder) -> Result<(Monomial, Coeff), AlgebraError> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .cloned()
            .ok_or(AlgebraError::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Result<Monomial, AlgebraError> {
        self.leading_term(order).map(|t| t.0)
    }

    fn check_ring(&self, o: &Polynomial) -> Result<(), AlgebraError> {
        if same_ring(&self.ring, &o.ring) {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub fn try_add(&self, o: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_ring(o)?;
        Ok(Polynomial { ring: self.ring.clone(), terms: merge_add(&self.terms, &o.terms, None, &TermOrder::Lex) })
    }

    pub fn try_sub(&self, o: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_ring(o)?;
        let m1 = self.ring.field().one().neg();
        Ok(Polynomial { ring: self.ring.clone(), terms: merge_add(&self.terms, &o.terms, Some(&m1), &TermOrder::Lex) })
    }

    pub fn try_mul(&self, o: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_ring(o)?;
        if self.is_zero() || o.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m = ma.checked_mul(mb).ok_or(AlgebraError::ExponentOverflow)?;
                let c = ca.mul(cb);
                acc.entry(m).and_modify(|x| *x = x.add(&c)).or_insert(c);
            }
        }
        Ok(Polynomial::from_terms(&self.ring, acc.into_iter().collect()))
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn scale(&self, s: &Coeff) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (*m, c.mul(s))).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, s: &Coeff) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.mul(s))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut r = Polynomial::one(&self.ring);
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: &TermOrder) -> Polynomial {
        match self.leading_term(order) {
            Ok((_, c)) => self.scale(&c.inv()),
            Err(_) => self.clone(),
        }
    }

    /// Largest weighted degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.iter().map(|(m, _)| self.ring.degree(m)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| self.ring.degree(m));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Substitutes `images[i]` for the `i`-th variable. The images may live in
    /// another ring; the result lives there.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, AlgebraError> {
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .ok_or_else(|| AlgebraError::InvalidRing("no substitution images".into()))?;
        let mut cache: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            if target.field() != self.ring.field() {
                return Err(AlgebraError::RingMismatch);
            }
            let mut t = Polynomial::constant(&target, c.clone());
            for i in 0..self.ring.nvars() {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                let p = cache.entry((i, e)).or_insert_with(|| images[i].pow(e)).clone();
                t = t.try_mul(&p)?;
            }
            out = out.try_add(&t)?;
        }
        Ok(out)
    }

    /// Sets variable `var` to the constant `value`.
    pub fn specialize(&self, var: usize, value: &Coeff) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.exp(var);
            let mut mm = *m;
            mm.set_exp(var, 0);
            let mut cc = c.clone();
            for _ in 0..e {
                cc = cc.mul(value);
            }
            terms.push((mm, cc));
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Re-embeds into `ring`, sending variable `i` to variable `map[i]`.
    pub fn map_vars(&self, ring: &Arc<PolyRing>, map: &[usize]) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.permuted(map), c.clone())).collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Moves the polynomial into a ring with the same variables (possibly
    /// another grading), or with extra trailing variables.
    pub fn embed(&self, ring: &Arc<PolyRing>) -> Polynomial {
        assert!(ring.nvars() >= self.ring.nvars());
        assert_eq!(ring.field(), self.ring.field());
        Polynomial { ring: ring.clone(), terms: self.terms.clone() }
    }

    /// Reduces coefficients into `ring`'s field (which must accept them).
    pub fn change_field(&self, ring: &Arc<PolyRing>) -> Result<Polynomial, AlgebraError> {
        let f = ring.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let cc = match c {
                Coeff::Q(r) => f.from_rational(r)?,
                Coeff::Fp { .. } if f.contains(c) => c.clone(),
                Coeff::Fp { .. } => return Err(AlgebraError::RingMismatch),
            };
            terms.push((*m, cc));
        }
        Ok(Polynomial::from_terms(ring, terms))
    }

    pub fn parse(ring: &Arc<PolyRing>, s: &str) -> Result<Polynomial, AlgebraError> {
        super::parse::parse_polynomial(ring, s)
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, o: &Self) -> bool {
        same_ring(&self.ring, &o.ring) && self.terms == o.terms
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Print in the ring's degrevlex order, which reads most naturally.
        let terms = self.sorted_terms(&TermOrder::DegRevLex);
        for (k, (m, c)) in terms.iter().enumerate() {
            let neg = c.prints_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.display_with(self.ring.names()))?;
            } else {
                write!(f, "{abs}*{}", m.display_with(self.ring.names()))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        self.try_add(o).expect("ring mismatch")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        self.try_sub(o).expect("ring mismatch")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        self.try_mul(o).expect("ring mismatch")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}
