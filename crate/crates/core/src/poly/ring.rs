use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::coeff::Field;
use super::monomial::{Monomial, MAX_VARS};
use super::polynomial::Polynomial;
use crate::error::AlgebraError;

/// `K[x_1, ..., x_n]` with a positive integer grading on the variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolyRing {
    names: Vec<String>,
    field: Field,
    grading: Vec<u32>,
}

impl PolyRing {
    pub fn new(names: Vec<String>, field: Field) -> Result<Arc<Self>, AlgebraError> {
        let n = names.len();
        Self::with_grading(names, field, vec![1; n])
    }

    pub fn with_grading(
        names: Vec<String>,
        field: Field,
        grading: Vec<u32>,
    ) -> Result<Arc<Self>, AlgebraError> {
        if names.is_empty() {
            return Err(AlgebraError::InvalidRing("at least one variable is required".into()));
        }
        if names.len() > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(names.len()));
        }
        if grading.len() != names.len() {
            return Err(AlgebraError::InvalidRing("one degree per variable is required".into()));
        }
        if grading.iter().any(|&d| d == 0) {
            return Err(AlgebraError::InvalidRing("variable degrees must be positive".into()));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(AlgebraError::InvalidRing(format!("duplicate variable `{a}`")));
            }
        }
        if let Field::Prime(p) = field {
            Field::prime(p)?;
        }
        Ok(Arc::new(PolyRing { names, field, grading }))
    }

    /// `K[x1, ..., xn]` with the standard grading.
    pub fn standard(n: usize, field: Field) -> Arc<Self> {
        Self::new((1..=n).map(|i| format!("x{i}")).collect(), field).expect("valid ring")
    }

    /// A standard graded ring with the given variable names.
    pub fn from_names(names: &[&str], field: Field) -> Result<Arc<Self>, AlgebraError> {
        Self::new(names.iter().map(|s| s.to_string()).collect(), field)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn grading(&self) -> &[u32] {
        &self.grading
    }

    pub fn is_standard_graded(&self) -> bool {
        self.grading.iter().all(|&d| d == 1)
    }

    /// Sum of the variable degrees; the shift in graded local duality.
    pub fn canonical_shift(&self) -> i64 {
        self.grading.iter().map(|&d| d as i64).sum()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn degree(&self, m: &Monomial) -> i64 {
        m.weighted_degree(&self.grading)
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial {
        assert!(i < self.nvars(), "variable index out of range");
        Polynomial::monomial(self, Monomial::var(i), self.field.one())
    }

    pub fn vars(self: &Arc<Self>) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    /// The ring with extra variables appended after the existing ones.
    pub fn extend(&self, names: &[&str], degrees: &[u32]) -> Result<Arc<Self>, AlgebraError> {
        let mut all = self.names.clone();
        let mut grading = self.grading.clone();
        for (k, name) in names.iter().enumerate() {
            let mut name = name.to_string();
            while all.contains(&name) {
                name.push('_');
            }
            all.push(name);
            grading.push(degrees.get(k).copied().unwrap_or(1));
        }
        Self::with_grading(all, self.field, grading)
    }

    /// The same variables over another coefficient field.
    pub fn with_field(&self, field: Field) -> Result<Arc<Self>, AlgebraError> {
        Self::with_grading(self.names.clone(), field, self.grading.clone())
    }

    /// The same variables and field with the standard grading.
    pub fn standard_graded(&self) -> Arc<Self> {
        Self::new(self.names.clone(), self.field).expect("valid ring")
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.names.join(","))?;
        if !self.is_standard_graded() {
            let ds: Vec<String> = self.grading.iter().map(|d| d.to_string()).collect();
            write!(f, " deg=({})", ds.join(","))?;
        }
        Ok(())
    }
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
