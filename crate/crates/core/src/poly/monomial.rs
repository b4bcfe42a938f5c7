use std::fmt;

use crate::error::AlgebraError;

/// Hard cap on the number of ring variables; exponent vectors are stored inline.
pub const MAX_VARS: usize = 32;

/// A power product `x^a`, stored as a fixed-width exponent vector.
///
/// Positions past the ring's variable count are always zero, so equality,
/// hashing and divisibility never need the ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
}

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial { exps: [0; MAX_VARS] }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self, AlgebraError> {
        if exps.len() > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(exps.len()));
        }
        let mut m = Self::one();
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).map_err(|_| AlgebraError::ExponentOverflow)?;
        }
        Ok(m)
    }

    /// Builds the square-free monomial on the given variable indices.
    pub fn squarefree(vars: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::one();
        for v in vars {
            m.exps[v] = 1;
        }
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    pub fn exponent_vec(&self, n: usize) -> Vec<u32> {
        self.exps[..n].iter().map(|&e| e as u32).collect()
    }

    pub fn set_exp(&mut self, i: usize, e: u32) {
        self.exps[i] = u16::try_from(e).expect("exponent overflow");
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> i64 {
        weights
            .iter()
            .zip(&self.exps)
            .map(|(&w, &e)| w as i64 * e as i64)
            .sum()
    }

    pub fn checked_mul(&self, o: &Monomial) -> Option<Monomial> {
        let mut r = *self;
        for (a, &b) in r.exps.iter_mut().zip(&o.exps) {
            *a = a.checked_add(b)?;
        }
        Some(r)
    }

    /// Product; panics on exponent overflow rather than wrapping.
    #[inline]
    pub fn mul(&self, o: &Monomial) -> Monomial {
        self.checked_mul(o).expect("exponent overflow")
    }

    #[inline]
    pub fn divides(&self, o: &Monomial) -> bool {
        self.exps.iter().zip(&o.exps).all(|(a, b)| a <= b)
    }

    /// `o / self` when `self | o`.
    pub fn quotient_of(&self, o: &Monomial) -> Option<Monomial> {
        let mut r = *o;
        for (a, &b) in r.exps.iter_mut().zip(&self.exps) {
            *a = a.checked_sub(b)?;
        }
        Some(r)
    }

    /// `self / o`, assuming `o | self`.
    #[inline]
    pub fn div_exact(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, &b) in r.exps.iter_mut().zip(&o.exps) {
            debug_assert!(*a >= b);
            *a -= b;
        }
        r
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, &b) in r.exps.iter_mut().zip(&o.exps) {
            *a = (*a).max(b);
        }
        r
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, &b) in r.exps.iter_mut().zip(&o.exps) {
            *a = (*a).min(b);
        }
        r
    }

    /// `self : o` in the monomial sense, i.e. `self / gcd(self, o)`.
    pub fn colon(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, &b) in r.exps.iter_mut().zip(&o.exps) {
            *a = a.saturating_sub(b);
        }
        r
    }

    pub fn is_coprime(&self, o: &Monomial) -> bool {
        self.support_mask() & o.support_mask() == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// The square-free part (product of the variables in the support).
    pub fn radical(&self) -> Monomial {
        let mut r = *self;
        for e in r.exps.iter_mut() {
            *e = (*e).min(1);
        }
        r
    }

    /// Bit `i` set iff `x_i` divides the monomial.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e != 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    pub fn support(&self) -> Vec<usize> {
        (0..MAX_VARS).filter(|&i| self.exps[i] != 0).collect()
    }

    /// Permutes variables: variable `i` of `self` becomes variable `map[i]`.
    pub fn permuted(&self, map: &[usize]) -> Monomial {
        let mut r = Monomial::one();
        for (i, &j) in map.iter().enumerate() {
            r.exps[j] = self.exps[i];
        }
        r
    }

    /// Writes the monomial with the given variable names, `1` for the unit.
    pub fn display_with(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, name) in names.iter().enumerate() {
            match self.exps[i] {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..n])
    }
}
