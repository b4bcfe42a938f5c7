use std::sync::Arc;

use super::complex::{Face, SimplicialComplex, MAX_VERTICES};
use crate::error::AlgebraError;
use crate::groebner::{Ideal, MonomialIdeal};
use crate::poly::{Field, Monomial, PolyRing};

/// A finite poset with positive element degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    degrees: Vec<u32>,
    /// `less[a] & (1 << b) != 0` iff `a ≺ b`; transitively closed.
    less: Vec<u64>,
}

impl Poset {
    /// Builds the order generated by the relations `a ≺ b`.
    pub fn new(names: Vec<String>, degrees: Vec<u32>, relations: &[(usize, usize)]) -> Result<Self, AlgebraError> {
        let n = names.len();
        if n > MAX_VERTICES || n > crate::poly::MAX_VARS {
            return Err(AlgebraError::TooManyVariables(n));
        }
        if degrees.len() != n || degrees.contains(&0) {
            return Err(AlgebraError::InvalidRing("one positive degree per element".into()));
        }
        let mut less = vec![0u64; n];
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(AlgebraError::InvalidRing(format!("relation ({a}, {b}) out of range")));
            }
            less[a] |= 1 << b;
        }
        // transitive closure
        for k in 0..n {
            for a in 0..n {
                if less[a] >> k & 1 == 1 {
                    less[a] |= less[k];
                }
            }
        }
        if (0..n).any(|a| less[a] >> a & 1 == 1) {
            return Err(AlgebraError::InvalidRing("relations contain a cycle".into()));
        }
        Ok(Poset { names, degrees, less })
    }

    /// A chain `e_0 ≺ e_1 ≺ ...` of standard degree.
    pub fn chain(n: usize) -> Self {
        let rel: Vec<(usize, usize)> = (1..n).map(|k| (k - 1, k)).collect();
        Self::new((0..n).map(|k| format!("h{}", k + 1)).collect(), vec![1; n], &rel).expect("a chain is a poset")
    }

    pub fn antichain(n: usize) -> Self {
        Self::new((0..n).map(|k| format!("h{}", k + 1)).collect(), vec![1; n], &[]).expect("an antichain is a poset")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.less[a] >> b & 1 == 1
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a == b || self.less(a, b) || self.less(b, a)
    }

    /// Unordered incomparable pairs `(a, b)`, `a < b`.
    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| !self.comparable(a, b)).collect()
    }

    /// The polynomial ring with one variable per element, in the poset's degrees.
    pub fn ring(&self, field: Field) -> Result<Arc<PolyRing>, AlgebraError> {
        PolyRing::with_grading(self.names.clone(), field, self.degrees.clone())
    }

    /// Faces are the chains of the poset.
    pub fn order_complex(&self) -> SimplicialComplex {
        let n = self.len();
        // maximal chains by depth-first extension upward
        fn extend(p: &Poset, chain: Face, top: usize, out: &mut Vec<Face>) {
            let ups: Vec<usize> = (0..p.len()).filter(|&b| p.less(top, b)).collect();
            if ups.is_empty() {
                out.push(chain);
            }
            for b in ups {
                extend(p, chain | 1 << b, b, out);
            }
        }
        let mut out = Vec::new();
        for a in 0..n {
            extend(self, 1 << a, a, &mut out);
        }
        if n == 0 {
            out.push(0);
        }
        SimplicialComplex::from_masks(n, out)
    }
}

/// `J = (h_1 h_2 : h_1, h_2 incomparable)` in `ring` (one variable per element).
pub fn asl_discrete_monomial_ideal(p: &Poset, ring: &Arc<PolyRing>) -> Result<MonomialIdeal, AlgebraError> {
    if ring.nvars() != p.len() {
        return Err(AlgebraError::RingMismatch);
    }
    Ok(MonomialIdeal::new(ring, p.incomparable_pairs().into_iter().map(|(a, b)| Monomial::squarefree([a, b])).collect()))
}

/// The discrete ASL ideal over the rationals, graded by the poset degrees.
pub fn asl_discrete_ideal(p: &Poset) -> Result<Ideal, AlgebraError> {
    let ring = p.ring(Field::Rationals)?;
    Ok(asl_discrete_monomial_ideal(p, &ring)?.to_ideal())
}
