//! Weight realizations of initial ideals and the associated flat family.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::ideal::{ideal_quotient, Ideal};
use crate::error::AlgebraError;
use crate::poly::{Monomial, PolyRing, Polynomial, Rational, TermOrder, WeightVector};

/// Inequalities `coeffs · w >= rhs`.
type System = BTreeMap<Vec<Rational>, Rational>;

/// Systems larger than this are abandoned in favour of certified candidates.
const FM_LIMIT: usize = 20_000;

fn scale_key(coeffs: Vec<Rational>, rhs: Rational) -> Option<(Vec<Rational>, Rational)> {
    let lead = coeffs.iter().find(|c| !c.is_zero())?.clone();
    let abs = if lead.signum() < 0 { lead.neg() } else { lead };
    let s = Rational::one().div(&abs);
    Some((coeffs.iter().map(|c| c.mul(&s)).collect(), rhs.mul(&s)))
}

fn insert(sys: &mut System, coeffs: Vec<Rational>, rhs: Rational) -> Result<(), ()> {
    match scale_key(coeffs, rhs.clone()) {
        None => {
            if rhs.signum() > 0 {
                Err(())
            } else {
                Ok(())
            }
        }
        Some((k, r)) => {
            let e = sys.entry(k).or_insert_with(|| r.clone());
            if r > *e {
                *e = r;
            }
            Ok(())
        }
    }
}

/// Fourier–Motzkin: returns a rational solution of `sys` (vars `0..n`) or
/// `None` if the elimination grew past [`FM_LIMIT`] or was infeasible.
fn fourier_motzkin(sys: System, n: usize) -> Option<Vec<Rational>> {
    let mut stages: Vec<System> = Vec::with_capacity(n);
    let mut cur = sys;
    for k in (0..n).rev() {
        let mut next = System::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (c, r) in &cur {
            match c[k].signum() {
                0 => insert(&mut next, c.clone(), r.clone()).ok()?,
                s if s > 0 => pos.push((c, r)),
                _ => neg.push((c, r)),
            }
        }
        if pos.len() * neg.len() + next.len() > FM_LIMIT {
            return None;
        }
        for (pc, pr) in &pos {
            for (nc, nr) in &neg {
                // scale so the k-th coefficients cancel
                let a = nc[k].neg();
                let b = pc[k].clone();
                let coeffs: Vec<Rational> = (0..n).map(|i| pc[i].mul(&a).add(&nc[i].mul(&b))).collect();
                let rhs = pr.mul(&a).add(&nr.mul(&b));
                insert(&mut next, coeffs, rhs).ok()?;
            }
        }
        stages.push(cur);
        cur = next;
    }
    stages.reverse();
    let mut w: Vec<Rational> = Vec::with_capacity(n);
    for (k, stage) in stages.iter().enumerate() {
        let mut lo = Rational::zero();
        let mut hi: Option<Rational> = None;
        for (c, r) in stage {
            let mut rest = r.clone();
            for (i, wi) in w.iter().enumerate() {
                rest = rest.sub(&c[i].mul(wi));
            }
            match c[k].signum() {
                0 => {}
                s if s > 0 => {
                    let b = rest.div(&c[k]);
                    if b > lo {
                        lo = b;
                    }
                }
                _ => {
                    let b = rest.div(&c[k]);
                    if hi.as_ref().is_none_or(|h| b < *h) {
                        hi = Some(b);
                    }
                }
            }
        }
        if hi.as_ref().is_some_and(|h| *h < lo) {
            return None;
        }
        w.push(lo);
    }
    Some(w)
}

fn to_integer_weight(w: &[Rational]) -> Option<WeightVector> {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    let mut l = num_bigint::BigInt::from(1);
    for x in w {
        l = l.lcm(&x.denom());
    }
    let mut out = Vec::with_capacity(w.len());
    for x in w {
        let v = x.numer() * (&l / x.denom());
        out.push(v.to_u64()?);
    }
    Some(WeightVector(out))
}

/// Weight candidates `sum D^k e_k` that induce `order` on bounded exponents.
fn adic_candidate(order: &TermOrder, lo: usize, hi: usize, d: u64) -> Option<Vec<u64>> {
    let n = hi - lo;
    let pow = |k: usize| d.checked_pow(k as u32);
    let mut w = vec![0u64; hi];
    match order {
        TermOrder::Lex => {
            for i in lo..hi {
                w[i] = pow(hi - 1 - i)?;
            }
        }
        TermOrder::DegRevLex => {
            let top = pow(n)?;
            for i in lo..hi {
                w[i] = top - pow(i - lo)?;
            }
        }
        TermOrder::WeightThen { weight, tiebreak } => {
            let inner = adic_candidate(tiebreak, lo, hi, d)?;
            let m = pow(n + 1)?.checked_mul(d)?;
            for i in lo..hi {
                let wi = weight.0.get(i).copied().unwrap_or(0);
                w[i] = wi.checked_mul(m)?.checked_add(inner[i])?;
            }
        }
        TermOrder::Block { split, first, second } => {
            let mid = (*split).clamp(lo, hi);
            let a = adic_candidate(first, lo, mid, d)?;
            let b = adic_candidate(second, mid, hi, d)?;
            let m = pow(n + 1)?.checked_mul(d)?;
            for i in lo..mid {
                w[i] = a[i].checked_mul(m)?.checked_add(1)?;
            }
            w[mid..hi].copy_from_slice(&b[mid..hi]);
        }
    }
    Some(w)
}

/// Whether `w` realizes the `order`-initial ideal of `ideal`: the reduced
/// basis under `WeightThen(w, order)` has the same leading monomials and the
/// `w`-initial form of each element is its leading term alone.
pub fn certify_weight(ideal: &Ideal, order: &TermOrder, w: &WeightVector) -> bool {
    let target = ideal.groebner_basis(order).leading_monomials();
    let refined = TermOrder::weight_then(w.clone(), order.clone());
    let gb = ideal.groebner_basis(&refined);
    if gb.leading_monomials() != target {
        return false;
    }
    gb.elements().iter().all(|g| {
        let lead = g.leading_monomial(order).expect("nonzero");
        let top = w.eval(&lead);
        g.terms().iter().all(|(m, _)| *m == lead || w.eval(m) < top)
    })
}

/// A weight `w` with `in_w(I) = in_<(I)`, certified by [`certify_weight`].
pub fn realize_weight(ideal: &Ideal, order: &TermOrder) -> Result<WeightVector, AlgebraError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let gb = ideal.groebner_basis(order);
    let mut sys = System::new();
    for i in 0..n {
        let mut c = vec![Rational::zero(); n];
        c[i] = Rational::one();
        let _ = insert(&mut sys, c, Rational::zero());
    }
    let mut max_exp = 1u32;
    for g in gb.elements() {
        let lead = g.leading_monomial(order)?;
        for (m, _) in g.terms() {
            max_exp = max_exp.max((0..n).map(|i| m.exp(i)).max().unwrap_or(0));
            if *m == lead {
                continue;
            }
            let c: Vec<Rational> = (0..n).map(|i| Rational::from_int(lead.exp(i) as i64 - m.exp(i) as i64)).collect();
            insert(&mut sys, c, Rational::one())
                .map_err(|_| AlgebraError::Internal("leading term equals a trailing term".into()))?;
        }
    }
    if let Some(w) = fourier_motzkin(sys, n).as_deref().and_then(to_integer_weight) {
        if certify_weight(ideal, order, &w) {
            return Ok(w);
        }
    }
    let mut d = 2 * max_exp as u64 + 2;
    for _ in 0..6 {
        if let Some(c) = adic_candidate(order, 0, n, d) {
            let w = WeightVector(c);
            if certify_weight(ideal, order, &w) {
                return Ok(w);
            }
        }
        d *= 2;
    }
    Err(AlgebraError::Internal("no certified weight found".into()))
}

/// `hom_w(I)` inside `K[x_1..x_n, t]`, generated by the homogenized reduced
/// basis under `WeightThen(w, tiebreak)`.
#[derive(Clone, Debug)]
pub struct HomogenizedIdeal {
    base: Arc<PolyRing>,
    ring: Arc<PolyRing>,
    weight: WeightVector,
    ideal: Ideal,
}

fn w_homogenize(g: &Polynomial, w: &WeightVector, ring: &Arc<PolyRing>, t: usize) -> Polynomial {
    let top = g.terms().iter().map(|(m, _)| w.eval(m)).max().unwrap_or(0);
    let terms = g
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut mm = *m;
            mm.set_exp(t, (top - w.eval(m)) as u32);
            (mm, c.clone())
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

impl HomogenizedIdeal {
    pub fn base_ring(&self) -> &Arc<PolyRing> {
        &self.base
    }

    /// `K[x_1..x_n, t]`, with `t` last.
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn weight(&self) -> &WeightVector {
        &self.weight
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn generators(&self) -> &[Polynomial] {
        self.ideal.generators()
    }

    pub fn t_index(&self) -> usize {
        self.base.nvars()
    }

    /// Every generator is homogeneous for `deg x_i = w_i`, `deg t = 1`.
    pub fn is_w_homogeneous(&self) -> bool {
        let mut wt = self.weight.0.clone();
        wt.push(1);
        let full = WeightVector(wt);
        self.generators().iter().all(|g| {
            let mut it = g.terms().iter().map(|(m, _)| full.eval(m));
            let first = it.next();
            it.all(|d| Some(d) == first)
        })
    }

    /// The fibre over `t = value`, as an ideal of the base ring.
    pub fn fibre(&self, value: i64) -> Ideal {
        let c = self.ring.field().from_i64(value);
        let gens = self
            .generators()
            .iter()
            .map(|g| Polynomial::from_terms(&self.base, g.specialize(self.t_index(), &c).into_terms()))
            .collect();
        Ideal::new(&self.base, gens)
    }

    /// `t = 1`.
    pub fn general_fibre(&self) -> Ideal {
        self.fibre(1)
    }

    /// `t = 0`.
    pub fn special_fibre(&self) -> Ideal {
        self.fibre(0)
    }

    /// Whether `(hom_w(I) : t) = hom_w(I)`.
    pub fn t_is_nonzerodivisor(&self) -> Result<bool, AlgebraError> {
        let t = Ideal::new(&self.ring, vec![self.ring.var(self.t_index())]);
        let q = ideal_quotient(&self.ideal, &t)?;
        Ok(q.same_ideal(&self.ideal))
    }
}

/// `hom_w(I)` from the reduced basis under `WeightThen(w, DegRevLex)`.
pub fn homogenize_w(ideal: &Ideal, w: &WeightVector) -> Result<HomogenizedIdeal, AlgebraError> {
    homogenize_w_with(ideal, w, &TermOrder::DegRevLex, false)
}

/// `hom_w(I)` from the reduced basis under `WeightThen(w, tiebreak)`. With
/// `require_monomial`, `w` is rejected unless every `w`-initial form is a
/// single term.
pub fn homogenize_w_with(
    ideal: &Ideal,
    w: &WeightVector,
    tiebreak: &TermOrder,
    require_monomial: bool,
) -> Result<HomogenizedIdeal, AlgebraError> {
    let base = ideal.ring().clone();
    if w.len() != base.nvars() {
        return Err(AlgebraError::WeightRejected(format!("expected {} weights, got {}", base.nvars(), w.len())));
    }
    let order = TermOrder::weight_then(w.clone(), tiebreak.clone());
    let gb = ideal.groebner_basis(&order);
    if require_monomial {
        for g in gb.elements() {
            let top = g.terms().iter().map(|(m, _)| w.eval(m)).max().unwrap_or(0);
            if g.terms().iter().filter(|(m, _)| w.eval(m) == top).count() > 1 {
                return Err(AlgebraError::WeightRejected(format!("initial form of {g} is not a monomial")));
            }
        }
    }
    let ring = base.extend(&["t"], &[1])?;
    let t = base.nvars();
    let gens = gb.elements().iter().map(|g| w_homogenize(g, w, &ring, t)).collect();
    Ok(HomogenizedIdeal { base, ring: ring.clone(), weight: w.clone(), ideal: Ideal::new(&ring, gens) })
}

/// `in_w(f)`: the terms of maximal `w`-weight.
pub fn initial_form(f: &Polynomial, w: &WeightVector) -> Polynomial {
    let top = f.terms().iter().map(|(m, _)| w.eval(m)).max().unwrap_or(0);
    let terms: Vec<(Monomial, _)> = f.terms().iter().filter(|(m, _)| w.eval(m) == top).cloned().collect();
    Polynomial::from_terms(f.ring(), terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    fn ring(names: &[&str]) -> Arc<PolyRing> {
        PolyRing::from_names(names, Field::Rationals).unwrap()
    }

    #[test]
    fn weight_for_small_lex_basis() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x - y^2", "x*y"]).unwrap();
        let w = realize_weight(&i, &TermOrder::Lex).unwrap();
        assert!(w.0[0] > 2 * w.0[1]);
        assert!(certify_weight(&i, &TermOrder::Lex, &w));
    }

    #[test]
    fn weight_for_twisted_cubic() {
        let r = ring(&["x", "y", "z", "w"]);
        let i = Ideal::parse(&r, &["x*z - y^2", "x*w - y*z", "y*w - z^2"]).unwrap();
        let w = realize_weight(&i, &TermOrder::Lex).unwrap();
        let v = &w.0;
        assert!(v[0] + v[2] > 2 * v[1]);
        assert!(v[0] + v[3] > v[1] + v[2]);
        assert!(v[1] + v[3] > 2 * v[2]);
    }

    #[test]
    fn monomial_ideal_accepts_zero_weight() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x*y^2"]).unwrap();
        assert_eq!(realize_weight(&i, &TermOrder::Lex).unwrap(), WeightVector::zero(2));
    }

    #[test]
    fn homogenization_by_hand() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x - y^2", "y^3"]).unwrap();
        let h = homogenize_w(&i, &WeightVector(vec![3, 1])).unwrap();
        let expected = Ideal::parse(h.ring(), &["x - t*y^2", "y^3"]).unwrap();
        assert!(h.ideal().same_ideal(&expected));
        assert!(h.is_w_homogeneous());
        assert!(h.special_fibre().same_ideal(&Ideal::parse(&r, &["x", "y^3"]).unwrap()));
        assert!(h.general_fibre().same_ideal(&i));
        assert!(h.t_is_nonzerodivisor().unwrap());
    }

    #[test]
    fn homogeneous_input_needs_no_t() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^2 - x*y"]).unwrap();
        let h = homogenize_w(&i, &WeightVector(vec![1, 1])).unwrap();
        assert!(h.generators().iter().all(|g| g.terms().iter().all(|(m, _)| m.exp(2) == 0)));
    }

    #[test]
    fn rejects_non_monomial_initial_forms() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x - y"]).unwrap();
        let e = homogenize_w_with(&i, &WeightVector(vec![1, 1]), &TermOrder::Lex, true);
        assert!(matches!(e, Err(AlgebraError::WeightRejected(_))));
    }
}
