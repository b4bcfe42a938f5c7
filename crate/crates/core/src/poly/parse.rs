//! ASCII polynomial syntax: `+ - * ^ ( )`, integer or `a/b` coefficients,
//! variables taken from the ring. `*` may be omitted (`2x1`, `x1 x4`), and
//! juxtaposed names such as `x1x4` are split against the ring's variables.

use std::sync::Arc;

use num_bigint::BigInt;

use super::coeff::Rational;
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::PolyRing;
use crate::error::AlgebraError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Parser<'a> {
    ring: &'a Arc<PolyRing>,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    len: usize,
}

fn err(column: usize, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse { line: 1, column, message: message.into() }
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>, AlgebraError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push((Tok::Plus, col));
                i += 1
            }
            '-' => {
                out.push((Tok::Minus, col));
                i += 1
            }
            '*' => {
                out.push((Tok::Star, col));
                i += 1
            }
            '/' => {
                out.push((Tok::Slash, col));
                i += 1
            }
            '^' => {
                out.push((Tok::Caret, col));
                i += 1
            }
            '(' => {
                out.push((Tok::LParen, col));
                i += 1
            }
            ')' => {
                out.push((Tok::RParen, col));
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push((Tok::Num(text.parse().unwrap()), col));
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            }
            other => return Err(err(col, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

/// Splits a juxtaposition of variable names, longest match first.
fn split_names(ring: &PolyRing, ident: &str) -> Option<Vec<usize>> {
    if ident.is_empty() {
        return Some(Vec::new());
    }
    let mut candidates: Vec<(usize, &String)> = ring
        .names()
        .iter()
        .enumerate()
        .filter(|(_, n)| ident.starts_with(n.as_str()))
        .collect();
    candidates.sort_by_key(|(_, n)| std::cmp::Reverse(n.len()));
    for (i, name) in candidates {
        if let Some(mut rest) = split_names(ring, &ident[name.len()..]) {
            rest.insert(0, i);
            return Some(rest);
        }
    }
    None
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len + 1, |t| t.1)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial, AlgebraError> {
        let mut acc = Polynomial::zero(self.ring);
        let mut first = true;
        loop {
            let negate = match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    false
                }
                Some(Tok::Minus) => {
                    self.next();
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen))
    }

    fn term(&mut self) -> Result<Polynomial, AlgebraError> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some(&Tok::Star) {
                self.next();
                let f = self.factor()?;
                acc = acc.try_mul(&f)?;
            } else if self.peek() == Some(&Tok::Slash) {
                self.next();
                let col = self.col();
                match self.next() {
                    Some(Tok::Num(d)) if d != BigInt::from(0) => {
                        let q = Rational::from_big(num_rational::BigRational::from_integer(d));
                        let c = self.ring.field().from_rational(&q).map_err(|e| err(col, e.to_string()))?;
                        acc = acc.scale(&c.inv());
                    }
                    _ => return Err(err(col, "expected a nonzero integer divisor")),
                }
            } else if self.starts_factor() {
                let f = self.factor()?;
                acc = acc.try_mul(&f)?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    /// An exponent binds to the last variable of a juxtaposed name only.
    fn factor(&mut self) -> Result<Polynomial, AlgebraError> {
        let (prefix, base) = self.atom()?;
        let base = self.power(base)?;
        match prefix {
            Some(p) => p.try_mul(&base),
            None => Ok(base),
        }
    }

    fn power(&mut self, base: Polynomial) -> Result<Polynomial, AlgebraError> {
        if self.peek() == Some(&Tok::Caret) {
            self.next();
            let col = self.col();
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n.try_into().map_err(|_| err(col, "exponent too large"))?;
                    if e > u16::MAX as u32 {
                        return Err(err(col, "exponent too large"));
                    }
                    return Ok(base.pow(e));
                }
                _ => return Err(err(col, "malformed exponent: expected a non-negative integer")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<(Option<Polynomial>, Polynomial), AlgebraError> {
        let col = self.col();
        match self.next() {
            Some(Tok::Num(n)) => {
                let mut value = Rational::from_big(num_rational::BigRational::from_integer(n));
                if self.peek() == Some(&Tok::Slash) {
                    self.next();
                    let dcol = self.col();
                    match self.next() {
                        Some(Tok::Num(d)) if d != BigInt::from(0) => {
                            value = value.div(&Rational::from_big(num_rational::BigRational::from_integer(d)));
                        }
                        _ => return Err(err(dcol, "expected a nonzero denominator")),
                    }
                }
                let c = self.ring.field().from_rational(&value).map_err(|e| err(col, e.to_string()))?;
                Ok((None, Polynomial::constant(self.ring, c)))
            }
            Some(Tok::Ident(name)) => {
                let mut vars = split_names(self.ring, &name)
                    .ok_or_else(|| err(col, format!("unknown variable `{name}`")))?;
                let last = vars.pop().expect("nonempty identifier");
                if vars.is_empty() {
                    return Ok((None, self.ring.var(last)));
                }
                let mut m = Monomial::one();
                for v in vars {
                    m.set_exp(v, m.exp(v) + 1);
                }
                let prefix = Polynomial::monomial(self.ring, m, self.ring.field().one());
                Ok((Some(prefix), self.ring.var(last)))
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                let c = self.col();
                if self.next() != Some(Tok::RParen) {
                    return Err(err(c, "expected `)`"));
                }
                Ok((None, e))
            }
            Some(t) => Err(err(col, format!("unexpected token {t:?}"))),
            None => Err(err(col, "unexpected end of input")),
        }
    }
}

pub(crate) fn parse_polynomial(ring: &Arc<PolyRing>, s: &str) -> Result<Polynomial, AlgebraError> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(err(1, "empty polynomial"));
    }
    let mut p = Parser { ring, toks, pos: 0, len: s.chars().count() };
    let f = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(err(p.col(), "trailing input"));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    #[test]
    fn parses_spec_syntax() {
        let r = PolyRing::standard(5, Field::Rationals);
        let f = Polynomial::parse(&r, "x1*x4*x5 - x2*x4^2 - x3*x5^2").unwrap();
        assert_eq!(f.num_terms(), 3);
        let g = Polynomial::parse(&r, "x1 x4 x5 - x2x4^2 - x3*x5^2").unwrap();
        assert_eq!(f, g);
        let h = Polynomial::parse(&r, "(x1+x2)*(x1-x2) - 2x1^2/1").unwrap();
        assert_eq!(h, Polynomial::parse(&r, "-x1^2 - x2^2").unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        let r = PolyRing::standard(3, Field::Rationals);
        assert!(matches!(Polynomial::parse(&r, "x^-1"), Err(AlgebraError::Parse { .. })));
        assert!(matches!(Polynomial::parse(&r, "x1^-1"), Err(AlgebraError::Parse { column: 4, .. })));
        assert!(matches!(Polynomial::parse(&r, "x1 + y"), Err(AlgebraError::Parse { column: 6, .. })));
        assert!(Polynomial::parse(&r, "(x1").is_err());
        assert!(Polynomial::parse(&r, "").is_err());
    }

    #[test]
    fn prime_field_coefficients() {
        let r = PolyRing::standard(2, Field::Prime(7));
        let f = Polynomial::parse(&r, "8x1 + 1/2 x2").unwrap();
        assert_eq!(f, Polynomial::parse(&r, "x1 + 4x2").unwrap());
    }
}
