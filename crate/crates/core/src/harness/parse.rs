//! Line-oriented ideal files.
//!
//! ```text
//! # comment
//! vars x1..x4            # or: vars a b c
//! field Q                # Q or Fp
//! degrees 1 1 1 1        # optional, default standard
//! order lex              # optional
//! x1*x3 - x2^2           # one generator per line
//! minors 2               # t-minors of the rows that follow
//! row x1, x2, x3
//! row x2, x3, x4
//! seed g, h              # extra ideals (Knutson seeds)
//! colon x1, x2           # divisor ideals for colon closure
//! expect-initial x1*x3, x1*x4
//! ```

use std::path::Path;
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::groebner::Ideal;
use crate::poly::{Field, Polynomial, PolyRing, TermOrder};

/// A parsed ideal file.
#[derive(Clone, Debug)]
pub struct IdealFile {
    pub ring: Arc<PolyRing>,
    pub generators: Vec<Polynomial>,
    pub order: Option<TermOrder>,
    pub seeds: Vec<Vec<Polynomial>>,
    pub colons: Vec<Vec<Polynomial>>,
    /// Monomials as written after `expect-initial`.
    pub expect_initial: Option<Vec<String>>,
}

impl IdealFile {
    pub fn ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.generators.clone())
    }

    /// The declared order, or the ring's default.
    pub fn order_or_default(&self) -> TermOrder {
        self.order.clone().unwrap_or_else(|| self.ideal().default_order())
    }

    pub fn seed_ideals(&self) -> Vec<Ideal> {
        self.seeds.iter().map(|g| Ideal::new(&self.ring, g.clone())).collect()
    }

    pub fn colon_ideals(&self) -> Vec<Ideal> {
        self.colons.iter().map(|g| Ideal::new(&self.ring, g.clone())).collect()
    }
}

fn at(line: usize, column: usize, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse { line, column, message: message.into() }
}

/// Re-anchors a single-line parse error at `(line, offset + column)`.
fn relocate(e: AlgebraError, line: usize, offset: usize) -> AlgebraError {
    match e {
        AlgebraError::Parse { column, message, .. } => at(line, offset + column.max(1), message),
        other => at(line, offset + 1, other.to_string()),
    }
}

/// `x1..x4` expands to `x1 x2 x3 x4`.
fn expand_vars(tok: &str) -> Option<Vec<String>> {
    let (a, b) = tok.split_once("..")?;
    let split = |s: &str| {
        let k = s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        (s[..k].to_string(), s[k..].parse::<usize>().ok())
    };
    let (pa, lo) = split(a);
    let (pb, hi) = split(b);
    let (lo, hi) = (lo?, hi?);
    let pb = if pb.is_empty() { pa.clone() } else { pb };
    (pa == pb && !pa.is_empty()).then(|| (lo..=hi).map(|k| format!("{pa}{k}")).collect())
}

/// Comma-separated items with their 0-based start offsets within `s`.
fn split_items(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for part in s.split(',') {
        let lead = part.len() - part.trim_start().len();
        let t = part.trim();
        if !t.is_empty() {
            out.push((start + lead, t));
        }
        start += part.len() + 1;
    }
    out
}

/// Determinant by cofactor expansion along the first row.
fn det(m: &[Vec<Polynomial>], ring: &Arc<PolyRing>) -> Polynomial {
    match m.len() {
        0 => Polynomial::one(ring),
        1 => m[0][0].clone(),
        k => {
            let mut acc = Polynomial::zero(ring);
            for c in 0..k {
                let minor: Vec<Vec<Polynomial>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, p)| p.clone()).collect()).collect();
                let term = &m[0][c] * &det(&minor, ring);
                acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All `t x t` minors of `m`, rows and columns in lexicographic order.
pub fn minors(m: &[Vec<Polynomial>], t: usize, ring: &Arc<PolyRing>) -> Vec<Polynomial> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    for rs in subsets(m.len(), t) {
        for cs in subsets(cols, t) {
            let sub: Vec<Vec<Polynomial>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect()).collect();
            let d = det(&sub, ring);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

struct Pending {
    t: usize,
    line: usize,
    rows: Vec<Vec<Polynomial>>,
}

/// Parses ideal-file text. `field` overrides the `field` directive.
pub fn parse_ideal_text(text: &str, field: Option<Field>) -> Result<IdealFile, AlgebraError> {
    let mut names: Option<Vec<String>> = None;
    let mut declared_field = Field::Rationals;
    let mut degrees: Option<Vec<u32>> = None;
    let mut order = None;
    let mut ring: Option<Arc<PolyRing>> = None;
    let mut generators = Vec::new();
    let mut seeds = Vec::new();
    let mut colons = Vec::new();
    let mut expect_initial = None;
    let mut pending: Option<Pending> = None;

    let flush = |p: Option<Pending>, ring: &Arc<PolyRing>, gens: &mut Vec<Polynomial>| -> Result<(), AlgebraError> {
        if let Some(p) = p {
            if p.rows.iter().any(|r| r.len() != p.rows[0].len()) {
                return Err(at(p.line, 1, "matrix rows have different lengths"));
            }
            gens.extend(minors(&p.rows, p.t, ring));
        }
        Ok(())
    };

    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim_end();
        let lead = trimmed.len() - trimmed.trim_start().len();
        let line = trimmed.trim_start();
        if line.is_empty() {
            continue;
        }
        let word = line.split(char::is_whitespace).next().unwrap_or("");
        let tail = &line[word.len()..];
        // 0-based column where the directive's argument starts
        let rest_off = lead + word.len() + (tail.len() - tail.trim_start().len());
        let rest = tail.trim();
        let header_done = ring.is_some();
        match word {
            "vars" | "field" | "degrees" if header_done => {
                return Err(at(ln, lead + 1, format!("`{word}` must precede the generators")));
            }
            "vars" => {
                let mut v = Vec::new();
                for tok in rest.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
                    match expand_vars(tok) {
                        Some(e) => v.extend(e),
                        None if tok.contains("..") => return Err(at(ln, rest_off + 1, format!("bad variable range `{tok}`"))),
                        None => v.push(tok.to_string()),
                    }
                }
                names = Some(v);
            }
            "field" => declared_field = rest.parse().map_err(|e: AlgebraError| at(ln, rest_off + 1, e.to_string()))?,
            "degrees" => {
                let d = rest
                    .split_whitespace()
                    .map(|t| t.parse::<u32>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| at(ln, rest_off + 1, "degrees must be positive integers"))?;
                degrees = Some(d);
            }
            "order" => order = Some(TermOrder::parse(rest).map_err(|e| relocate(e, ln, rest_off))?),
            "expect-initial" => expect_initial = Some(split_items(rest).into_iter().map(|(_, s)| s.to_string()).collect()),
            _ => {
                let r = match &ring {
                    Some(r) => r.clone(),
                    None => {
                        let v = names.clone().ok_or_else(|| at(ln, lead + 1, "`vars` must come first"))?;
                        let n = v.len();
                        let r = PolyRing::with_grading(v, field.unwrap_or(declared_field), degrees.clone().unwrap_or(vec![1; n]))
                            .map_err(|e| at(ln, lead + 1, e.to_string()))?;
                        ring = Some(r.clone());
                        r
                    }
                };
                let parse_list = |s: &str, off: usize| -> Result<Vec<Polynomial>, AlgebraError> {
                    split_items(s).into_iter().map(|(o, item)| Polynomial::parse(&r, item).map_err(|e| relocate(e, ln, off + o))).collect()
                };
                match word {
                    "minors" => {
                        flush(pending.take(), &r, &mut generators)?;
                        let t = rest.parse::<usize>().map_err(|_| at(ln, rest_off + 1, "minor size must be a positive integer"))?;
                        if t == 0 {
                            return Err(at(ln, rest_off + 1, "minor size must be a positive integer"));
                        }
                        pending = Some(Pending { t, line: ln, rows: Vec::new() });
                    }
                    "row" => {
                        let p = pending.as_mut().ok_or_else(|| at(ln, lead + 1, "`row` outside a `minors` block"))?;
                        p.rows.push(parse_list(rest, rest_off)?);
                    }
                    "seed" => seeds.push(parse_list(rest, rest_off)?),
                    "colon" => colons.push(parse_list(rest, rest_off)?),
                    _ => {
                        flush(pending.take(), &r, &mut generators)?;
                        for item in parse_list(line.trim_end_matches(','), lead)? {
                            if !item.is_zero() {
                                generators.push(item);
                            }
                        }
                    }
                }
            }
        }
    }
    let ring = match ring {
        Some(r) => r,
        None => {
            let v = names.ok_or_else(|| at(1, 1, "missing `vars`"))?;
            let n = v.len();
            PolyRing::with_grading(v, field.unwrap_or(declared_field), degrees.unwrap_or(vec![1; n])).map_err(|e| at(1, 1, e.to_string()))?
        }
    };
    flush(pending.take(), &ring, &mut generators)?;
    Ok(IdealFile { ring, generators, order, seeds, colons, expect_initial })
}

/// Reads and parses an ideal file.
pub fn parse_ideal_file(path: &Path, field: Option<Field>) -> Result<IdealFile, AlgebraError> {
    let text = std::fs::read_to_string(path).map_err(|e| at(0, 0, format!("{}: {e}", path.display())))?;
    parse_ideal_text(&text, field)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twisted_cubic_from_minors() {
        let f = parse_ideal_text("vars x1..x4\norder lex\nminors 2\nrow x1, x2, x3\nrow x2, x3, x4\n", None).unwrap();
        assert_eq!(f.generators.len(), 3);
        assert_eq!(f.ring.nvars(), 4);
        assert_eq!(f.order, Some(TermOrder::Lex));
        assert_eq!(f.generators[0].to_string(), "-x2^2 + x1*x3");
    }

    #[test]
    fn prime_field_and_override() {
        let t = "vars x y\nfield F7\n8*x + y\n";
        let f = parse_ideal_text(t, None).unwrap();
        assert_eq!(f.ring.field(), Field::Prime(7));
        assert_eq!(f.generators[0].to_string(), "x + y");
        let g = parse_ideal_text(t, Some(Field::Rationals)).unwrap();
        assert_eq!(g.generators[0].to_string(), "8*x + y");
    }

    #[test]
    fn positioned_errors() {
        let e = parse_ideal_text("vars x1 x2\nx1^-1\n", None).unwrap_err();
        assert!(matches!(e, AlgebraError::Parse { line: 2, column: 4, .. }), "{e:?}");
        let e = parse_ideal_text("vars x1 x2\nx1 + x2, x1 + y\n", None).unwrap_err();
        assert!(matches!(e, AlgebraError::Parse { line: 2, column: 15, .. }), "{e:?}");
        assert!(parse_ideal_text("vars x\nfield F8\nx\n", None).is_err());
        assert!(parse_ideal_text("x1\n", None).is_err());
        assert!(parse_ideal_text("vars x\nrow x\n", None).is_err());
    }

    #[test]
    fn directives() {
        let f = parse_ideal_text(
            "vars a b c # three\ndegrees 1 2 3\nseed a, b\ncolon c\nexpect-initial a*b, c\na*b - c\n",
            None,
        )
        .unwrap();
        assert_eq!(f.ring.grading(), &[1, 2, 3]);
        assert_eq!((f.seeds.len(), f.seeds[0].len(), f.colons.len()), (1, 2, 1));
        assert_eq!(f.expect_initial, Some(vec!["a*b".to_string(), "c".to_string()]));
        assert_eq!(f.generators.len(), 1);
    }

    #[test]
    fn three_by_three_determinant() {
        let f = parse_ideal_text("vars x1..x9\nminors 3\nrow x1, x2, x3\nrow x4, x5, x6\nrow x7, x8, x9\n", None).unwrap();
        assert_eq!(f.generators.len(), 1);
        assert_eq!(f.generators[0].num_terms(), 6);
    }
}
