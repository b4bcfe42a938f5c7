use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::monomial::{Monomial, MAX_VARS};
use crate::error::AlgebraError;

/// A non-negative integer weight on the ring variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector(pub Vec<u64>);

impl WeightVector {
    pub fn zero(n: usize) -> Self {
        WeightVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w · a` for the exponent vector of `m`.
    pub fn eval(&self, m: &Monomial) -> u64 {
        self.0.iter().enumerate().map(|(i, &w)| w * m.exp(i) as u64).sum()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A monomial order. Variables are always ranked `x_1 > x_2 > ... > x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TermOrder {
    Lex,
    DegRevLex,
    /// Compare `w · a` first, then fall back to `tiebreak`.
    WeightThen { weight: WeightVector, tiebreak: Box<TermOrder> },
    /// Compare variables `0..split` with `first`, then the rest with `second`.
    Block { split: usize, first: Box<TermOrder>, second: Box<TermOrder> },
}

impl TermOrder {
    pub fn weight_then(weight: WeightVector, tiebreak: TermOrder) -> Self {
        TermOrder::WeightThen { weight, tiebreak: Box::new(tiebreak) }
    }

    pub fn block(split: usize, first: TermOrder, second: TermOrder) -> Self {
        TermOrder::Block { split, first: Box::new(first), second: Box::new(second) }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_range(a, b, 0, MAX_VARS)
    }

    fn cmp_range(&self, a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
        let ea = &a.exponents()[lo..hi];
        let eb = &b.exponents()[lo..hi];
        match self {
            TermOrder::Lex => ea.cmp(eb),
            TermOrder::DegRevLex => {
                let da: u32 = ea.iter().map(|&e| e as u32).sum();
                let db: u32 = eb.iter().map(|&e| e as u32).sum();
                if da != db {
                    return da.cmp(&db);
                }
                for i in (0..ea.len()).rev() {
                    if ea[i] != eb[i] {
                        return eb[i].cmp(&ea[i]);
                    }
                }
                Ordering::Equal
            }
            TermOrder::WeightThen { weight, tiebreak } => {
                let mut wa = 0u64;
                let mut wb = 0u64;
                for i in lo..hi.min(weight.0.len()) {
                    wa += weight.0[i] * a.exp(i) as u64;
                    wb += weight.0[i] * b.exp(i) as u64;
                }
                wa.cmp(&wb).then_with(|| tiebreak.cmp_range(a, b, lo, hi))
            }
            TermOrder::Block { split, first, second } => {
                let mid = (*split).clamp(lo, hi);
                first
                    .cmp_range(a, b, lo, mid)
                    .then_with(|| second.cmp_range(a, b, mid, hi))
            }
        }
    }

    /// Whether the order compares total degree first, so that every
    /// homogeneous computation proceeds degree by degree.
    pub fn is_degree_compatible(&self) -> bool {
        match self {
            TermOrder::DegRevLex => true,
            TermOrder::WeightThen { weight, tiebreak } => {
                let w0 = weight.0.first().copied().unwrap_or(0);
                if weight.0.iter().any(|&w| w != w0) {
                    false
                } else {
                    w0 > 0 || tiebreak.is_degree_compatible()
                }
            }
            _ => false,
        }
    }

    /// Parses `lex`, `degrevlex`, or `weight:w1,...,wn[/tiebreak]`.
    pub fn parse(s: &str) -> Result<Self, AlgebraError> {
        let t = s.trim();
        match t {
            "lex" => return Ok(TermOrder::Lex),
            "degrevlex" | "grevlex" | "revlex" => return Ok(TermOrder::DegRevLex),
            _ => {}
        }
        let bad = || AlgebraError::Parse { line: 0, column: 0, message: format!("unknown term order `{t}`") };
        let rest = t.strip_prefix("weight:").ok_or_else(bad)?;
        let (ws, tb) = match rest.split_once('/') {
            Some((w, tb)) => (w, TermOrder::parse(tb)?),
            None => (rest, TermOrder::DegRevLex),
        };
        let weight = ws
            .split(',')
            .map(|x| x.trim().parse::<u64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        Ok(TermOrder::weight_then(WeightVector(weight), tb))
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Lex => write!(f, "lex"),
            TermOrder::DegRevLex => write!(f, "degrevlex"),
            TermOrder::WeightThen { weight, tiebreak } => {
                let ws: Vec<String> = weight.0.iter().map(|w| w.to_string()).collect();
                write!(f, "weight:{}/{}", ws.join(","), tiebreak)
            }
            TermOrder::Block { split, first, second } => {
                write!(f, "block({split}:{first}|{second})")
            }
        }
    }
}
