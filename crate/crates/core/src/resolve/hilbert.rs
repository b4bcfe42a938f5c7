//! Hilbert series as exact rational functions.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::AlgebraError;
use crate::groebner::{Ideal, MonomialIdeal};
use crate::poly::Monomial;

/// A Laurent polynomial in `t` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    /// Exponent -> coefficient, no zeros.
    terms: BTreeMap<i64, i128>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(e: i64, c: i128) -> Self {
        let mut l = Laurent::zero();
        l.add_term(e, c);
        l
    }

    /// `1 - t^d`.
    pub fn one_minus(d: i64) -> Self {
        let mut l = Self::one();
        l.add_term(d, -1);
        l
    }

    pub fn from_coeffs(low: i64, coeffs: &[i128]) -> Self {
        let mut l = Laurent::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            l.add_term(low + k as i64, c);
        }
        l
    }

    pub fn add_term(&mut self, e: i64, c: i128) {
        if c == 0 {
            return;
        }
        let v = self.terms.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> i128 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i128)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn high_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        let mut r = self.clone();
        for (e, c) in o.terms() {
            r.add_term(e, c);
        }
        r
    }

    pub fn sub(&self, o: &Laurent) -> Laurent {
        let mut r = self.clone();
        for (e, c) in o.terms() {
            r.add_term(e, -c);
        }
        r
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        let mut r = Laurent::zero();
        for (a, x) in self.terms() {
            for (b, y) in o.terms() {
                r.add_term(a + b, x * y);
            }
        }
        r
    }

    /// `t^k * self`.
    pub fn shift(&self, k: i64) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    /// `self(t^-1)`.
    pub fn invert(&self) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    pub fn eval_one(&self) -> i128 {
        self.terms.values().sum()
    }

    /// Multiplicity of `t = 1` as a root; `None` for zero.
    pub fn order_at_one(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut p = self.clone();
        let mut k = 0;
        while p.eval_one() == 0 {
            p = p.div_one_minus_t();
            k += 1;
        }
        Some(k)
    }

    /// Exact quotient by `1 - t`; the caller guarantees divisibility.
    fn div_one_minus_t(&self) -> Laurent {
        // p = (1 - t) q  <=>  q_e = sum_{k <= e} p_k
        let (lo, hi) = (self.low_degree().unwrap_or(0), self.high_degree().unwrap_or(0));
        let mut q = Laurent::zero();
        let mut acc = 0i128;
        for e in lo..hi {
            acc += self.coeff(e);
            q.add_term(e, acc);
        }
        debug_assert_eq!(acc + self.coeff(hi), 0);
        q
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let a = c.abs();
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{sign}")?;
            if !first {
                write!(f, " ")?;
            }
            match (a, e) {
                (_, 0) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "t^{e}")?,
                (_, 1) => write!(f, "{a}t")?,
                _ => write!(f, "{a}t^{e}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `numerator / prod_i (1 - t^{d_i})` over the variable degrees `d_i`.
#[derive(Clone, Debug)]
pub struct HilbertSeries {
    numerator: Laurent,
    denominator: Vec<u32>,
}

impl HilbertSeries {
    pub fn new(numerator: Laurent, denominator: Vec<u32>) -> Self {
        HilbertSeries { numerator, denominator }
    }

    pub fn numerator(&self) -> &Laurent {
        &self.numerator
    }

    /// Degrees `d_i` of the denominator factors `1 - t^{d_i}`.
    pub fn denominator(&self) -> &[u32] {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Krull dimension: the pole order at `t = 1`. `None` for the zero module.
    pub fn dimension(&self) -> Option<usize> {
        self.numerator.order_at_one().map(|k| self.denominator.len().saturating_sub(k))
    }

    /// The h-polynomial: the numerator over `(1-t)^dim`. Standard grading only.
    pub fn h_polynomial(&self) -> Option<Laurent> {
        if self.denominator.iter().any(|&d| d != 1) {
            return None;
        }
        let k = self.numerator.order_at_one()?;
        Some((0..k).fold(self.numerator.clone(), |p, _| p.div_one_minus_t()))
    }

    /// Coefficients of `t^d` for `d` in `lo..=hi`.
    pub fn coefficients(&self, lo: i64, hi: i64) -> Vec<i128> {
        let Some(nlo) = self.numerator.low_degree() else {
            return vec![0; (hi - lo + 1).max(0) as usize];
        };
        let span = (hi - nlo).max(0) as usize;
        // p[m] = number of ways to write m as sum of denominator degrees
        let mut p = vec![0i128; span + 1];
        p[0] = 1;
        for &d in &self.denominator {
            let d = d as usize;
            for m in d..=span {
                p[m] += p[m - d];
            }
        }
        (lo..=hi)
            .map(|deg| {
                self.numerator
                    .terms()
                    .filter(|&(e, _)| e <= deg)
                    .map(|(e, c)| c * p[(deg - e) as usize])
                    .sum()
            })
            .collect()
    }

    pub fn coefficient(&self, d: i64) -> i128 {
        self.coefficients(d, d)[0]
    }

    /// Sum of two series over the same ring.
    pub fn add(&self, o: &HilbertSeries) -> HilbertSeries {
        assert_eq!(self.denominator, o.denominator, "series over different rings");
        HilbertSeries::new(self.numerator.add(&o.numerator), self.denominator.clone())
    }

    pub fn sub(&self, o: &HilbertSeries) -> HilbertSeries {
        assert_eq!(self.denominator, o.denominator, "series over different rings");
        HilbertSeries::new(self.numerator.sub(&o.numerator), self.denominator.clone())
    }

    pub fn shift(&self, k: i64) -> HilbertSeries {
        HilbertSeries::new(self.numerator.shift(k), self.denominator.clone())
    }

    fn denominator_poly(&self) -> Laurent {
        self.denominator.iter().fold(Laurent::one(), |acc, &d| acc.mul(&Laurent::one_minus(d as i64)))
    }
}

impl PartialEq for HilbertSeries {
    fn eq(&self, o: &Self) -> bool {
        if self.denominator == o.denominator {
            self.numerator == o.numerator
        } else {
            self.numerator.mul(&o.denominator_poly()) == o.numerator.mul(&self.denominator_poly())
        }
    }
}

impl Eq for HilbertSeries {}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for &d in &self.denominator {
            *counts.entry(d).or_default() += 1;
        }
        let den: Vec<String> = counts
            .iter()
            .map(|(&d, &k)| {
                let base = if d == 1 { "(1 - t)".to_string() } else { format!("(1 - t^{d})") };
                if k == 1 {
                    base
                } else {
                    format!("{base}^{k}")
                }
            })
            .collect();
        if den.is_empty() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / {}", self.numerator, den.join(""))
        }
    }
}

fn degree(m: &Monomial, grading: &[u32]) -> i64 {
    m.weighted_degree(grading)
}

fn pairwise_coprime(gens: &[Monomial]) -> bool {
    let mut seen = 0u32;
    for g in gens {
        let s = g.support_mask();
        if seen & s != 0 {
            return false;
        }
        seen |= s;
    }
    true
}

/// Numerator of `HS(S/M)` over `prod (1 - t^{d_i})`, by pivoting on a
/// variable power: `N(M) = N(M + (p)) + t^{deg p} N(M : p)`.
fn numerator(gens: Vec<Monomial>, grading: &[u32]) -> Laurent {
    let gens = crate::groebner::minimalize(gens);
    if gens.is_empty() {
        return Laurent::one();
    }
    if gens.iter().any(|g| g.is_one()) {
        return Laurent::zero();
    }
    if pairwise_coprime(&gens) {
        return gens.iter().fold(Laurent::one(), |acc, g| acc.mul(&Laurent::one_minus(degree(g, grading))));
    }
    // the variable occurring in the most non-pure generators
    let mut count = [0usize; crate::poly::MAX_VARS];
    for g in gens.iter().filter(|g| g.support_mask().count_ones() > 1) {
        for v in g.support() {
            count[v] += 1;
        }
    }
    let x = (0..count.len()).max_by_key(|&v| (count[v], std::cmp::Reverse(v))).expect("nonempty");
    let e = gens.iter().map(|g| g.exp(x)).filter(|&e| e > 0).min().expect("x occurs");
    let mut p = Monomial::one();
    p.set_exp(x, e);
    let mut plus = gens.clone();
    plus.push(p);
    let colon: Vec<Monomial> = gens.iter().map(|g| g.colon(&p)).collect();
    numerator(plus, grading).add(&numerator(colon, grading).shift(degree(&p, grading)))
}

/// `HS(S/M)` for a monomial ideal.
pub fn monomial_hilbert_series(m: &MonomialIdeal) -> HilbertSeries {
    let grading = m.ring().grading().to_vec();
    HilbertSeries::new(numerator(m.generators().to_vec(), &grading), grading)
}

/// `HS(S/L)` for the monomial ideal generated by `gens`, as a numerator.
pub(crate) fn quotient_numerator(gens: Vec<Monomial>, grading: &[u32]) -> Laurent {
    numerator(gens, grading)
}

/// `HS(S/I)`, read off the initial ideal under the ring's default order.
pub fn hilbert_series(ideal: &Ideal) -> Result<HilbertSeries, AlgebraError> {
    if !ideal.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous("Hilbert series needs a graded ideal".into()));
    }
    Ok(monomial_hilbert_series(&ideal.initial_ideal(&ideal.default_order())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, PolyRing};

    #[test]
    fn principal_quadric() {
        let r = PolyRing::from_names(&["x", "y"], Field::Rationals).unwrap();
        let h = hilbert_series(&Ideal::parse(&r, &["x*y"]).unwrap()).unwrap();
        assert_eq!(h.numerator(), &Laurent::one_minus(2));
        assert_eq!(h.coefficients(0, 4), vec![1, 2, 2, 2, 2]);
        assert_eq!(h.dimension(), Some(1));
        assert_eq!(h.to_string(), "(1 - t^2) / (1 - t)^2");
    }

    #[test]
    fn h_polynomial_of_a_quadric() {
        let r = PolyRing::from_names(&["x", "y"], Field::Rationals).unwrap();
        let h = hilbert_series(&Ideal::parse(&r, &["x*y"]).unwrap()).unwrap();
        assert_eq!(h.h_polynomial(), Some(Laurent::from_coeffs(0, &[1, 1])));
        let w = PolyRing::with_grading(vec!["x".into(), "y".into()], Field::Rationals, vec![1, 2]).unwrap();
        assert_eq!(monomial_hilbert_series(&MonomialIdeal::parse(&w, &["x*y"]).unwrap()).h_polynomial(), None);
    }

    #[test]
    fn zero_ideal_and_unit() {
        let r = PolyRing::from_names(&["x", "y", "z"], Field::Rationals).unwrap();
        let h = hilbert_series(&Ideal::zero(&r)).unwrap();
        assert_eq!(h.numerator(), &Laurent::one());
        assert_eq!(h.coefficients(0, 3), vec![1, 3, 6, 10]);
        let u = monomial_hilbert_series(&MonomialIdeal::new(&r, vec![Monomial::one()]));
        assert!(u.is_zero());
        assert_eq!(u.dimension(), None);
    }

    #[test]
    fn weighted_grading() {
        let r = PolyRing::with_grading(vec!["x".into(), "y".into()], Field::Rationals, vec![1, 2]).unwrap();
        let h = monomial_hilbert_series(&MonomialIdeal::parse(&r, &["x*y"]).unwrap());
        // standard monomials are x^a and y^b
        assert_eq!(h.coefficients(0, 5), vec![1, 1, 2, 1, 2, 1]);
        assert_eq!(h.dimension(), Some(1));
    }

    #[test]
    fn counts_agree_with_brute_force() {
        let r = PolyRing::from_names(&["a", "b", "c"], Field::Rationals).unwrap();
        let m = MonomialIdeal::parse(&r, &["a^2*b", "b^3", "a*c^2", "b*c"]).unwrap();
        let h = monomial_hilbert_series(&m);
        for d in 0..9u32 {
            let mut n = 0;
            for i in 0..=d {
                for j in 0..=d - i {
                    let mono = Monomial::from_exponents(&[i, j, d - i - j]).unwrap();
                    if !m.contains(&mono) {
                        n += 1;
                    }
                }
            }
            assert_eq!(h.coefficient(d as i64), n, "degree {d}");
        }
    }
}
