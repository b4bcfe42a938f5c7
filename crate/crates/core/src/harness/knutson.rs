use std::fmt;

use serde::Serialize;

use crate::error::AlgebraError;
use crate::groebner::{ideal_intersection, ideal_quotient, Ideal, MonomialIdeal};
use crate::poly::{Polynomial, TermOrder};
use crate::simplicial::minimal_primes_squarefree;

/// How a member entered the family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum Provenance {
    /// `(f)` itself.
    Principal,
    Seed { index: usize },
    Sum { left: usize, right: usize },
    Intersection { left: usize, right: usize },
    /// `I : J` for a user-supplied divisor ideal `J`.
    Colon { member: usize, divisor: usize },
    /// `I : P` for a minimal prime `P` of `in(I)`, read as an ideal of `S`.
    ColonByInitialPrime { member: usize, prime: Vec<usize> },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Principal => write!(f, "(f)"),
            Provenance::Seed { index } => write!(f, "seed {index}"),
            Provenance::Sum { left, right } => write!(f, "I{left} + I{right}"),
            Provenance::Intersection { left, right } => write!(f, "I{left} ∩ I{right}"),
            Provenance::Colon { member, divisor } => write!(f, "I{member} : J{divisor}"),
            Provenance::ColonByInitialPrime { member, prime } => {
                let vs: Vec<String> = prime.iter().map(|v| format!("x{}", v + 1)).collect();
                write!(f, "I{member} : ({})", vs.join(","))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct KnutsonMember {
    /// Generated by its reduced Gröbner basis under the family's order.
    pub ideal: Ideal,
    pub initial: MonomialIdeal,
    pub provenance: Provenance,
}

/// A finite part of the Knutson family `C_f`.
#[derive(Clone, Debug)]
pub struct KnutsonFamily {
    pub f: Polynomial,
    pub order: TermOrder,
    pub members: Vec<KnutsonMember>,
    /// Set when the budget stopped the closure before a fixed point.
    pub budget_exhausted: bool,
    /// Square-freeness or distinctness violations; empty on success.
    pub violations: Vec<String>,
}

impl KnutsonFamily {
    pub fn all_initial_squarefree(&self) -> bool {
        self.members.iter().all(|m| m.initial.is_squarefree())
    }

    pub fn is_sound(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Serialize for KnutsonFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Member<'a> {
            generators: Vec<String>,
            initial: Vec<String>,
            provenance: &'a Provenance,
        }
        #[derive(Serialize)]
        struct Repr<'a> {
            f: String,
            order: String,
            budget_exhausted: bool,
            violations: &'a [String],
            members: Vec<Member<'a>>,
        }
        Repr {
            f: self.f.to_string(),
            order: self.order.to_string(),
            budget_exhausted: self.budget_exhausted,
            violations: &self.violations,
            members: self
                .members
                .iter()
                .map(|m| Member {
                    generators: m.ideal.generators().iter().map(|g| g.to_string()).collect(),
                    initial: m.initial.generator_strings(),
                    provenance: &m.provenance,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl fmt::Display for KnutsonFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "f = {}  [{}]", self.f, self.order)?;
        for (k, m) in self.members.iter().enumerate() {
            writeln!(f, "I{k}: in = {}  <- {}", m.initial, m.provenance)?;
        }
        if self.budget_exhausted {
            writeln!(f, "budget exhausted")?;
        }
        for v in &self.violations {
            writeln!(f, "VIOLATION: {v}")?;
        }
        Ok(())
    }
}

struct Closure<'a> {
    order: &'a TermOrder,
    f: &'a Polynomial,
    fam: Vec<KnutsonMember>,
    violations: Vec<String>,
}

impl Closure<'_> {
    /// Adds `ideal` unless trivial or already present. Returns whether it was new.
    fn offer(&mut self, ideal: Ideal, provenance: Provenance) -> Result<bool, AlgebraError> {
        if ideal.is_unit() || ideal.is_zero() {
            return Ok(false);
        }
        let gb = ideal.groebner_basis(self.order);
        let canonical = Ideal::new(ideal.ring(), gb.elements().to_vec()).with_basis(gb.as_ref().clone());
        let initial = gb.initial_ideal();
        if let Some(k) = self.fam.iter().position(|m| m.initial == initial) {
            if !self.fam[k].ideal.same_ideal(&canonical) {
                self.violations.push(format!("{provenance} and I{k} differ but share in = {initial}"));
            }
            return Ok(false);
        }
        if !initial.is_squarefree() {
            self.violations.push(format!("{provenance}: in = {initial} is not square-free"));
        }
        if !canonical.contains(self.f)? {
            self.violations.push(format!("{provenance} does not contain f"));
        }
        self.fam.push(KnutsonMember { ideal: canonical, initial, provenance });
        Ok(true)
    }
}

/// Closes `{(f)} ∪ seeds` under sums, intersections and colons, adding at
/// most `budget` members beyond the seeds.
///
/// Colons use the supplied `divisors` and every minimal prime of each
/// member's initial ideal. Members are explored in insertion order, so the
/// output is deterministic.
pub fn knutson_closure(
    f: &Polynomial,
    order: &TermOrder,
    seeds: &[Ideal],
    divisors: &[Ideal],
    budget: usize,
) -> Result<KnutsonFamily, AlgebraError> {
    let ring = f.ring();
    let lead = f.leading_monomial(order)?;
    if !lead.is_squarefree() {
        return Err(AlgebraError::NotSquarefree(format!("in(f) = {}", lead.display_with(ring.names()))));
    }
    let mut c = Closure { order, f, fam: Vec::new(), violations: Vec::new() };
    c.offer(Ideal::new(ring, vec![f.clone()]), Provenance::Principal)?;
    for (index, s) in seeds.iter().enumerate() {
        c.offer(s.clone(), Provenance::Seed { index })?;
    }
    let mut added = 0;
    let mut exhausted = false;
    let mut next = 0;
    'outer: while next < c.fam.len() {
        let m = next;
        next += 1;
        let mut candidates: Vec<(Provenance, Box<dyn Fn() -> Result<Ideal, AlgebraError> + '_>)> = Vec::new();
        let im = c.fam[m].ideal.clone();
        for (d, j) in divisors.iter().enumerate() {
            let im = im.clone();
            candidates.push((Provenance::Colon { member: m, divisor: d }, Box::new(move || ideal_quotient(&im, j))));
        }
        if c.fam[m].initial.is_squarefree() {
            for p in minimal_primes_squarefree(&c.fam[m].initial)? {
                let im = im.clone();
                let pi = MonomialIdeal::prime(ring, &p).to_ideal();
                candidates.push((Provenance::ColonByInitialPrime { member: m, prime: p }, Box::new(move || ideal_quotient(&im, &pi))));
            }
        }
        for a in 0..m {
            let (ia, im1, im2) = (c.fam[a].ideal.clone(), im.clone(), im.clone());
            let ia2 = ia.clone();
            candidates.push((Provenance::Sum { left: a, right: m }, Box::new(move || Ok(ia.sum(&im1)))));
            candidates.push((Provenance::Intersection { left: a, right: m }, Box::new(move || ideal_intersection(&ia2, &im2))));
        }
        for (prov, make) in candidates {
            if added >= budget {
                exhausted = true;
                break 'outer;
            }
            if c.offer(make()?, prov)? {
                added += 1;
            }
        }
    }
    Ok(KnutsonFamily { f: f.clone(), order: order.clone(), members: c.fam, budget_exhausted: exhausted, violations: c.violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, PolyRing};

    #[test]
    fn zero_budget_keeps_the_principal_ideal() {
        let r = PolyRing::standard(3, Field::Rationals);
        let f = Polynomial::parse(&r, "x1*x2*x3").unwrap();
        let fam = knutson_closure(&f, &TermOrder::Lex, &[], &[], 0).unwrap();
        assert_eq!(fam.members.len(), 1);
        assert!(fam.budget_exhausted);
    }

    #[test]
    fn coordinate_product_gives_squarefree_monomial_ideals() {
        let r = PolyRing::standard(3, Field::Rationals);
        let f = Polynomial::parse(&r, "x1*x2*x3").unwrap();
        let fam = knutson_closure(&f, &TermOrder::Lex, &[], &[], 1000).unwrap();
        assert!(fam.is_sound(), "{:?}", fam.violations);
        assert!(!fam.budget_exhausted);
        for m in &fam.members {
            assert!(m.ideal.generators().iter().all(|g| g.is_monomial()));
        }
        // every proper nonzero square-free monomial ideal in 3 variables:
        // monotone Boolean functions on 3 inputs minus the two constants
        assert_eq!(fam.members.len(), 18);
    }

    #[test]
    fn non_squarefree_lead_rejected() {
        let r = PolyRing::standard(2, Field::Rationals);
        let f = Polynomial::parse(&r, "x1^2 - x2^2").unwrap();
        assert!(matches!(knutson_closure(&f, &TermOrder::Lex, &[], &[], 5), Err(AlgebraError::NotSquarefree(_))));
    }
}
