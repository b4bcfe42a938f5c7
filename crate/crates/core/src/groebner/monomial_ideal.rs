use std::fmt;
use std::sync::Arc;

use super::ideal::Ideal;
use crate::error::AlgebraError;
use crate::poly::{Monomial, PolyRing, Polynomial};

/// A monomial ideal, stored by its minimal generators.
#[derive(Clone)]
pub struct MonomialIdeal {
    ring: Arc<PolyRing>,
    gens: Vec<Monomial>,
}

/// Drops generators divisible by others; sorts by degree, then lex descending.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

impl MonomialIdeal {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: minimalize(gens) }
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: Vec::new() }
    }

    /// Parses each string as a monomial of `ring`.
    pub fn parse(ring: &Arc<PolyRing>, gens: &[&str]) -> Result<Self, AlgebraError> {
        let mut ms = Vec::new();
        for s in gens {
            let p = Polynomial::parse(ring, s)?;
            if !p.is_monomial() {
                return Err(AlgebraError::Parse { line: 1, column: 1, message: format!("`{s}` is not a monomial") });
            }
            ms.push(p.terms()[0].0);
        }
        Ok(Self::new(ring, ms))
    }

    /// The ideal generated by products of the given variable sets.
    pub fn from_supports(ring: &Arc<PolyRing>, sets: impl IntoIterator<Item = Vec<usize>>) -> Self {
        Self::new(ring, sets.into_iter().map(Monomial::squarefree).collect())
    }

    /// The prime `(x_i : i in vars)`.
    pub fn prime(ring: &Arc<PolyRing>, vars: &[usize]) -> Self {
        Self::new(ring, vars.iter().map(|&i| Monomial::var(i)).collect())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, o: &MonomialIdeal) -> bool {
        o.gens.iter().all(|g| self.contains(g))
    }

    pub fn radical(&self) -> MonomialIdeal {
        Self::new(&self.ring, self.gens.iter().map(|g| g.radical()).collect())
    }

    pub fn sum(&self, o: &MonomialIdeal) -> MonomialIdeal {
        Self::new(&self.ring, self.gens.iter().chain(&o.gens).copied().collect())
    }

    pub fn product(&self, o: &MonomialIdeal) -> MonomialIdeal {
        let mut gs = Vec::new();
        for a in &self.gens {
            for b in &o.gens {
                gs.push(a.mul(b));
            }
        }
        Self::new(&self.ring, gs)
    }

    pub fn intersection(&self, o: &MonomialIdeal) -> MonomialIdeal {
        let mut gs = Vec::new();
        for a in &self.gens {
            for b in &o.gens {
                gs.push(a.lcm(b));
            }
        }
        Self::new(&self.ring, gs)
    }

    /// `I : m`.
    pub fn quotient_monomial(&self, m: &Monomial) -> MonomialIdeal {
        Self::new(&self.ring, self.gens.iter().map(|g| g.colon(m)).collect())
    }

    /// `I : J`, the intersection of `I : m` over the generators `m` of `J`.
    pub fn quotient(&self, o: &MonomialIdeal) -> MonomialIdeal {
        let mut acc = MonomialIdeal::new(&self.ring, vec![Monomial::one()]);
        for m in &o.gens {
            acc = acc.intersection(&self.quotient_monomial(m));
        }
        acc
    }

    /// Support masks of the generators (meaningful for square-free ideals).
    pub fn masks(&self) -> Vec<u32> {
        self.gens.iter().map(|g| g.support_mask()).collect()
    }

    pub fn to_ideal(&self) -> Ideal {
        let one = self.ring.field().one();
        Ideal::new(
            &self.ring,
            self.gens.iter().map(|m| Polynomial::monomial(&self.ring, *m, one.clone())).collect(),
        )
    }

    pub fn max_degree(&self) -> i64 {
        self.gens.iter().map(|g| self.ring.degree(g)).max().unwrap_or(0)
    }

    /// Generator strings, in canonical order.
    pub fn generator_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.display_with(self.ring.names())).collect()
    }
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, o: &Self) -> bool {
        self.ring.nvars() == o.ring.nvars() && self.gens == o.gens
    }
}

impl Eq for MonomialIdeal {}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator_strings().join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Whether every minimal generator is square-free.
pub fn is_squarefree(m: &MonomialIdeal) -> bool {
    m.is_squarefree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    #[test]
    fn minimal_generators() {
        let r = PolyRing::from_names(&["x", "y", "z"], Field::Rationals).unwrap();
        let m = MonomialIdeal::parse(&r, &["x*y", "x", "y^2", "x*y^3"]).unwrap();
        assert_eq!(m.generator_strings(), vec!["x", "y^2"]);
        assert!(!m.is_squarefree());
        assert!(MonomialIdeal::parse(&r, &["x*z", "y*z"]).unwrap().is_squarefree());
    }

    #[test]
    fn lattice_operations() {
        let r = PolyRing::from_names(&["x", "y"], Field::Rationals).unwrap();
        let x = MonomialIdeal::parse(&r, &["x"]).unwrap();
        let y = MonomialIdeal::parse(&r, &["y"]).unwrap();
        assert_eq!(x.intersection(&y), MonomialIdeal::parse(&r, &["x*y"]).unwrap());
        let xy = MonomialIdeal::parse(&r, &["x*y"]).unwrap();
        assert_eq!(xy.quotient(&x), y);
        assert_eq!(MonomialIdeal::parse(&r, &["x^2*y"]).unwrap().radical(), xy);
    }
}
