use std::fmt;
use std::sync::Arc;

use super::engine::{self, BuchbergerOptions, ModuleOrder, Reducer, VPoly, VTerm};
use super::monomial_ideal::MonomialIdeal;
use crate::error::AlgebraError;
use crate::poly::{same_ring, Monomial, PolyRing, Polynomial, TermOrder};

pub(crate) fn to_vpoly(f: &Polynomial, order: &ModuleOrder) -> VPoly {
    engine::normalize(f.terms().iter().map(|(m, c)| (VTerm::new(*m, 0), c.clone())).collect(), order)
}

pub(crate) fn from_vpoly(ring: &Arc<PolyRing>, v: &VPoly) -> Polynomial {
    debug_assert!(v.iter().all(|(t, _)| t.comp == 0));
    Polynomial::from_terms(ring, v.iter().map(|(t, c)| (t.mono, c.clone())).collect())
}

/// A reduced Gröbner basis.
///
/// Elements are monic and sorted increasingly by leading monomial.
#[derive(Clone)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    order: TermOrder,
    elements: Vec<Polynomial>,
    vecs: Vec<VPoly>,
    /// Set when computed with a degree cap: a basis only up to this degree.
    truncated_at: Option<i64>,
}

impl GroebnerBasis {
    fn build(ring: &Arc<PolyRing>, order: &TermOrder, gens: &[Polynomial], cap: Option<i64>) -> Result<Self, AlgebraError> {
        if let Some(g) = gens.iter().find(|g| !same_ring(g.ring(), ring)) {
            let _ = g;
            return Err(AlgebraError::RingMismatch);
        }
        let mo = ModuleOrder::Ideal(order.clone());
        let input = gens.iter().map(|g| to_vpoly(g, &mo)).collect();
        let vecs = engine::buchberger(input, &mo, ring.grading(), &BuchbergerOptions { degree_cap: cap });
        let elements = vecs.iter().map(|v| from_vpoly(ring, v)).collect();
        Ok(GroebnerBasis { ring: ring.clone(), order: order.clone(), elements, vecs, truncated_at: cap })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn truncated_at(&self) -> Option<i64> {
        self.truncated_at
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.vecs.iter().map(|v| v[0].0.mono).collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(&self.ring, self.leading_monomials())
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.vecs.len() == 1 && self.vecs[0][0].0.mono.is_one()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, AlgebraError> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(AlgebraError::RingMismatch);
        }
        let mo = ModuleOrder::Ideal(self.order.clone());
        let r = Reducer::new(&mo, &self.vecs, 0..self.vecs.len());
        Ok(from_vpoly(&self.ring, &r.reduce(to_vpoly(f, &mo), true, None)))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, AlgebraError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub(crate) fn vecs(&self) -> &[VPoly] {
        &self.vecs
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, o: &Self) -> bool {
        same_ring(&self.ring, &o.ring) && self.order == o.order && self.elements == o.elements
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.elements.iter()).finish()
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.elements.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(ring: &Arc<PolyRing>, gens: &[Polynomial], order: &TermOrder) -> Result<GroebnerBasis, AlgebraError> {
    GroebnerBasis::build(ring, order, gens, None)
}

/// Gröbner basis up to degree `max_degree`: S-pairs of larger degree are
/// never formed. For homogeneous input and a degree-compatible order the
/// elements of degree `<= max_degree` agree with the full reduced basis.
pub fn buchberger_truncated(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial],
    order: &TermOrder,
    max_degree: i64,
) -> Result<GroebnerBasis, AlgebraError> {
    let low: Vec<Polynomial> = gens.iter().filter(|g| g.degree().is_some_and(|d| d <= max_degree)).cloned().collect();
    GroebnerBasis::build(ring, order, &low, Some(max_degree))
}

/// Remainder of `f` on division by `g`; unique since `g` is reduced.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial, AlgebraError> {
    g.normal_form(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    fn ring(names: &[&str]) -> Arc<PolyRing> {
        PolyRing::from_names(names, Field::Rationals).unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["x", "y", "z"]);
        let g = buchberger(&r, &[p(&r, "x - y^2")], &TermOrder::Lex).unwrap();
        assert_eq!(g.normal_form(&p(&r, "x^2")).unwrap(), p(&r, "y^4"));
        assert!(g.normal_form(&p(&r, "x - y^2")).unwrap().is_zero());
        assert_eq!(g.normal_form(&p(&r, "z")).unwrap(), p(&r, "z"));
    }

    #[test]
    fn small_basis_by_hand() {
        let r = ring(&["x", "y"]);
        let g = buchberger(&r, &[p(&r, "x - y^2"), p(&r, "x*y")], &TermOrder::Lex).unwrap();
        assert_eq!(g.elements(), &[p(&r, "y^3"), p(&r, "x - y^2")]);
    }

    #[test]
    fn twisted_cubic_is_already_a_basis() {
        let r = ring(&["x", "y", "z", "w"]);
        let gens = [p(&r, "x*z - y^2"), p(&r, "x*w - y*z"), p(&r, "y*w - z^2")];
        let g = buchberger(&r, &gens, &TermOrder::Lex).unwrap();
        assert_eq!(g.len(), 3);
        let lead = g.initial_ideal();
        assert_eq!(lead, MonomialIdeal::parse(&r, &["x*z", "x*w", "y*w"]).unwrap());
    }

    #[test]
    fn truncation_keeps_low_degrees() {
        let r = ring(&["x", "y", "z", "w"]);
        let gens = [p(&r, "x*z - y^2"), p(&r, "x*w - y*z"), p(&r, "y*w - z^2"), p(&r, "x^3 + w^3")];
        let g = buchberger_truncated(&r, &gens, &TermOrder::DegRevLex, 2).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g.truncated_at(), Some(2));
    }

    #[test]
    fn unit_ideal() {
        let r = ring(&["x", "y"]);
        let g = buchberger(&r, &[p(&r, "x"), p(&r, "x + 1")], &TermOrder::DegRevLex).unwrap();
        assert!(g.is_unit());
    }
}
