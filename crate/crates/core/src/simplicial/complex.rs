use std::fmt;
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::groebner::MonomialIdeal;
use crate::linalg::{Echelon, SparseRow};
use crate::poly::{Field, Monomial, PolyRing};

/// Vertex subsets are bit masks over `0..n`.
pub type Face = u64;

pub const MAX_VERTICES: usize = 64;

/// A simplicial complex on the vertex set `0..n`, stored by its facets.
///
/// The void complex (no faces) has no facets; `{∅}` has the single facet `0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
}

fn maximal(mut sets: Vec<Face>) -> Vec<Face> {
    sets.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    sets.dedup();
    let mut out: Vec<Face> = Vec::new();
    for s in sets {
        if !out.iter().any(|&f| s & f == s) {
            out.push(s);
        }
    }
    out.sort_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(a.cmp(b)));
    out
}

/// Minimal sets meeting every member of `edges` (Berge's algorithm).
pub(crate) fn minimal_transversals(edges: &[Face]) -> Vec<Face> {
    let mut ts: Vec<Face> = vec![0];
    for &e in edges {
        let mut next: Vec<Face> = Vec::new();
        for &t in &ts {
            if t & e != 0 {
                next.push(t);
            } else {
                let mut bits = e;
                while bits != 0 {
                    let v = bits.trailing_zeros();
                    bits &= bits - 1;
                    next.push(t | 1 << v);
                }
            }
        }
        next.sort_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(a.cmp(b)));
        next.dedup();
        let mut min: Vec<Face> = Vec::new();
        for s in next {
            if !min.iter().any(|&m| m & s == m) {
                min.push(s);
            }
        }
        ts = min;
    }
    ts
}

pub(crate) fn mask_of(vs: &[usize]) -> Face {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

pub(crate) fn vertices_of(f: Face) -> Vec<usize> {
    (0..MAX_VERTICES).filter(|&v| f >> v & 1 == 1).collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

impl SimplicialComplex {
    /// The complex generated by `facets` (non-maximal sets are dropped).
    pub fn new(n: usize, facets: &[Vec<usize>]) -> Result<Self, AlgebraError> {
        if n > MAX_VERTICES {
            return Err(AlgebraError::Unsupported(format!("{n} vertices, at most {MAX_VERTICES}")));
        }
        if let Some(v) = facets.iter().flatten().find(|&&v| v >= n) {
            return Err(AlgebraError::InvalidRing(format!("vertex {v} outside 0..{n}")));
        }
        Ok(Self::from_masks(n, facets.iter().map(|f| mask_of(f)).collect()))
    }

    pub fn from_masks(n: usize, facets: Vec<Face>) -> Self {
        SimplicialComplex { n, facets: maximal(facets) }
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Self {
        Self::from_masks(n, vec![if n == 64 { u64::MAX } else { (1u64 << n) - 1 }])
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn facet_masks(&self) -> &[Face] {
        &self.facets
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| vertices_of(f)).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension; `-1` for `{∅}` and `None` for the void complex.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.count_ones() as i64 - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|&f| face & f == face)
    }

    /// All faces, by size then mask.
    pub fn faces(&self) -> Vec<Face> {
        let mut out: Vec<Face> = Vec::new();
        for &f in &self.facets {
            // subsets of f
            let mut s = f;
            loop {
                out.push(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        out.sort_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(a.cmp(b)));
        out.dedup();
        out
    }

    /// Faces with exactly `k` vertices.
    pub fn faces_of_size(&self, k: usize) -> Vec<Face> {
        self.faces().into_iter().filter(|f| f.count_ones() as usize == k).collect()
    }

    /// `lk σ = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}`; void if `σ ∉ Δ`.
    pub fn link(&self, sigma: Face) -> SimplicialComplex {
        let fs = self.facets.iter().filter(|&&f| f & sigma == sigma).map(|&f| f & !sigma).collect();
        Self::from_masks(self.n, fs)
    }

    /// Restriction to the vertex subset `w`.
    pub fn induced(&self, w: Face) -> SimplicialComplex {
        Self::from_masks(self.n, self.facets.iter().map(|&f| f & w).collect())
    }

    /// `f_{-1}, f_0, ..., f_{d-1}`.
    pub fn f_vector(&self) -> Vec<u64> {
        let Some(d) = self.dim() else { return Vec::new() };
        let mut f = vec![0u64; (d + 2) as usize];
        for face in self.faces() {
            f[face.count_ones() as usize] += 1;
        }
        f
    }

    /// Reduced cohomology `dim H̃^i(Δ; K)`, `i >= -1`.
    pub fn reduced_cohomology(&self, i: i64, field: Field) -> usize {
        if i < -1 || self.is_void() {
            return 0;
        }
        let faces = self.faces();
        let size = |k: i64| -> Vec<Face> { faces.iter().copied().filter(|f| f.count_ones() as i64 == k).collect() };
        let ci = size(i + 1);
        if ci.is_empty() {
            return 0;
        }
        // H̃^i = dim C^i - rank δ^i - rank δ^{i-1}; rank δ^i = rank ∂_{i+1}
        let rank_boundary = |top: &[Face], bottom: &[Face]| -> usize {
            if top.is_empty() || bottom.is_empty() {
                return 0;
            }
            let index: std::collections::HashMap<Face, usize> = bottom.iter().enumerate().map(|(k, &f)| (f, k)).collect();
            let mut e = Echelon::new();
            for &t in top {
                let mut row: SparseRow = Vec::new();
                for (pos, v) in vertices_of(t).into_iter().enumerate() {
                    let c = if pos % 2 == 0 { field.one() } else { field.one().neg() };
                    row.push((index[&(t & !(1 << v))], c));
                }
                row.sort_by_key(|x| x.0);
                e.insert(row);
            }
            e.rank()
        };
        let up = rank_boundary(&size(i + 2), &ci);
        let down = rank_boundary(&ci, &size(i));
        ci.len() - up - down
    }

    /// Vertices: nonempty faces in [`faces`](Self::faces) order. Faces: chains.
    pub fn barycentric_subdivision(&self) -> Result<SimplicialComplex, AlgebraError> {
        let faces: Vec<Face> = self.faces().into_iter().filter(|&f| f != 0).collect();
        if faces.len() > MAX_VERTICES {
            return Err(AlgebraError::Unsupported(format!("subdivision has {} vertices", faces.len())));
        }
        if self.is_void() {
            return Ok(Self::void(0));
        }
        let index: std::collections::HashMap<Face, usize> = faces.iter().enumerate().map(|(k, &f)| (f, k)).collect();
        let mut chains: Vec<Face> = Vec::new();
        for &f in &self.facets {
            // maximal chains of f correspond to orderings of its vertices
            fn go(rest: Face, cur: Face, acc: Face, index: &std::collections::HashMap<Face, usize>, out: &mut Vec<Face>) {
                if rest == 0 {
                    out.push(acc);
                    return;
                }
                let mut bits = rest;
                while bits != 0 {
                    let v = bits.trailing_zeros();
                    bits &= bits - 1;
                    let next = cur | 1 << v;
                    go(rest & !(1 << v), next, acc | 1 << index[&next], index, out);
                }
            }
            go(f, 0, 0, &index, &mut chains);
        }
        Ok(Self::from_masks(faces.len(), chains))
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fs: Vec<String> = self
            .facets()
            .iter()
            .map(|v| format!("{{{}}}", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "<{}>", fs.join(" "))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, {})", self.n, self)
    }
}

fn require_squarefree(m: &MonomialIdeal) -> Result<(), AlgebraError> {
    if !m.is_squarefree() {
        return Err(AlgebraError::NotSquarefree(m.to_string()));
    }
    Ok(())
}

/// Minimal primes of a square-free monomial ideal, as variable sets.
pub fn minimal_primes_squarefree(m: &MonomialIdeal) -> Result<Vec<Vec<usize>>, AlgebraError> {
    require_squarefree(m)?;
    if m.is_unit() {
        return Ok(Vec::new());
    }
    let edges: Vec<Face> = m.generators().iter().map(|g| g.support_mask() as Face).collect();
    let mut ts = minimal_transversals(&edges);
    ts.sort_by_key(|&t| vertices_of(t));
    Ok(ts.into_iter().map(vertices_of).collect())
}

/// `Δ` with `I_Δ = M`: facets are complements of the minimal primes.
pub fn sr_complex(m: &MonomialIdeal) -> Result<SimplicialComplex, AlgebraError> {
    require_squarefree(m)?;
    let n = m.ring().nvars();
    if m.is_unit() {
        return Ok(SimplicialComplex::void(n));
    }
    let all: Face = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let primes = minimal_primes_squarefree(m)?;
    Ok(SimplicialComplex::from_masks(n, primes.iter().map(|p| all & !mask_of(p)).collect()))
}

/// `I_Δ` in `ring`, generated by the minimal non-faces.
pub fn sr_ideal(delta: &SimplicialComplex, ring: &Arc<PolyRing>) -> Result<MonomialIdeal, AlgebraError> {
    if ring.nvars() != delta.n_vertices() {
        return Err(AlgebraError::RingMismatch);
    }
    let n = delta.n_vertices();
    let all: Face = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let complements: Vec<Face> = delta.facet_masks().iter().map(|&f| all & !f).collect();
    let gens = minimal_transversals(&complements);
    Ok(MonomialIdeal::new(ring, gens.into_iter().map(|g| Monomial::squarefree(vertices_of(g))).collect()))
}

/// f-vector and h-vector of a complex.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct FaceVector {
    /// `f_{-1} = 1, f_0, ..., f_{d-1}`.
    pub f: Vec<u64>,
    /// `h_0, ..., h_d`.
    pub h: Vec<i64>,
}

/// `h_k = sum_{i<=k} (-1)^{k-i} C(d-i, k-i) f_{i-1}`, `d = dim + 1`.
pub fn face_vectors(delta: &SimplicialComplex) -> FaceVector {
    let f = delta.f_vector();
    let d = f.len().saturating_sub(1) as u64;
    let h = (0..f.len() as u64)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let t = binomial(d - i, k - i) as i64 * f[i as usize] as i64;
                    if (k - i) % 2 == 0 {
                        t
                    } else {
                        -t
                    }
                })
                .sum()
        })
        .collect();
    FaceVector { f, h }
}

/// `a^{(i)}`: from the `i`-binomial expansion `a = C(a_i, i) + C(a_{i-1}, i-1) + ...`,
/// returns `C(a_i, i+1) + C(a_{i-1}, i) + ...`.
fn upper_shadow_bound(a: u64, i: u64) -> u64 {
    let mut rest = a;
    let mut out = 0u64;
    let mut k = i;
    while rest > 0 && k > 0 {
        let mut m = k;
        while binomial(m + 1, k) <= rest {
            m += 1;
        }
        rest -= binomial(m, k);
        out += binomial(m, k + 1);
        k -= 1;
    }
    out
}

/// Kruskal–Katona: `v = (1, f_0, f_1, ...)` is an f-vector iff
/// `f_i <= f_{i-1}^{(i)}` for `i >= 1`.
pub fn kruskal_katona(v: &[u64]) -> bool {
    if v.first() != Some(&1) {
        return false;
    }
    (2..v.len()).all(|k| v[k] <= upper_shadow_bound(v[k - 1], (k - 1) as u64))
}

/// Next larger mask with the same popcount (colex successor).
fn gosper(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// The compressed complex of `v`: the first `f_{k-1}` `k`-sets in colex order.
///
/// Returns it when it is a complex with f-vector `v`, i.e. when `v` is an
/// f-vector.
pub fn is_f_vector(v: &[u64]) -> Option<SimplicialComplex> {
    if v.first() != Some(&1) {
        return None;
    }
    let n = *v.get(1).unwrap_or(&0) as usize;
    if n > MAX_VERTICES {
        return None;
    }
    let mut layers: Vec<Vec<Face>> = vec![vec![0]];
    for (k, &count) in v.iter().enumerate().skip(1) {
        let mut layer = Vec::with_capacity(count as usize);
        if count > 0 {
            if k > n {
                return None;
            }
            let mut s: Face = (1u64 << k) - 1;
            while (layer.len() as u64) < count {
                if k < 64 && s >> n != 0 {
                    return None;
                }
                layer.push(s);
                if layer.len() as u64 == count {
                    break;
                }
                s = gosper(s);
            }
        }
        layers.push(layer);
    }
    // closed under removing a vertex
    for k in 2..layers.len() {
        let below: std::collections::HashSet<Face> = layers[k - 1].iter().copied().collect();
        for &s in &layers[k] {
            let mut bits = s;
            while bits != 0 {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                if !below.contains(&(s & !(1 << v))) {
                    return None;
                }
            }
        }
    }
    let all: Vec<Face> = layers.into_iter().flatten().collect();
    let c = SimplicialComplex::from_masks(n, all);
    let mut want = v.to_vec();
    while want.len() > 1 && want.last() == Some(&0) {
        want.pop();
    }
    debug_assert_eq!(c.f_vector(), want);
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> Arc<PolyRing> {
        PolyRing::standard(n, Field::Rationals)
    }

    #[test]
    fn path_from_lex_twisted_cubic() {
        let r = PolyRing::from_names(&["x", "y", "z", "w"], Field::Rationals).unwrap();
        let m = MonomialIdeal::parse(&r, &["x*z", "x*w", "y*w"]).unwrap();
        let d = sr_complex(&m).unwrap();
        assert_eq!(d.facets(), vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(sr_ideal(&d, &r).unwrap(), m);
        assert_eq!(minimal_primes_squarefree(&m).unwrap(), vec![vec![0, 1], vec![0, 3], vec![2, 3]]);
    }

    #[test]
    fn simplex_and_zero_ideal() {
        let r = ring(3);
        let d = sr_complex(&MonomialIdeal::zero(&r)).unwrap();
        assert_eq!(d, SimplicialComplex::simplex(3));
        assert!(sr_ideal(&d, &r).unwrap().is_zero());
        let empty = SimplicialComplex::from_masks(3, vec![0]);
        assert_eq!(sr_ideal(&empty, &r).unwrap().generator_strings(), vec!["x1", "x2", "x3"]);
    }

    #[test]
    fn non_squarefree_rejected() {
        let r = ring(2);
        let m = MonomialIdeal::parse(&r, &["x1^2"]).unwrap();
        assert!(matches!(sr_complex(&m), Err(AlgebraError::NotSquarefree(_))));
    }

    #[test]
    fn reduced_cohomology_examples() {
        let two_points = SimplicialComplex::new(2, &[vec![0], vec![1]]).unwrap();
        assert_eq!(two_points.reduced_cohomology(0, Field::Rationals), 1);
        let empty = SimplicialComplex::from_masks(0, vec![0]);
        assert_eq!(empty.reduced_cohomology(-1, Field::Rationals), 1);
        let hollow = SimplicialComplex::new(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(hollow.reduced_cohomology(1, Field::Rationals), 1);
        assert_eq!(hollow.reduced_cohomology(0, Field::Rationals), 0);
        assert_eq!(SimplicialComplex::simplex(3).reduced_cohomology(-1, Field::Rationals), 0);
    }

    #[test]
    fn torsion_depends_on_the_field() {
        // six-vertex real projective plane
        let rp2 = SimplicialComplex::new(
            6,
            &[
                vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4], vec![0, 4, 5], vec![0, 1, 5],
                vec![1, 2, 4], vec![2, 3, 5], vec![1, 3, 4], vec![1, 3, 5], vec![2, 4, 5],
            ],
        )
        .unwrap();
        assert_eq!(rp2.reduced_cohomology(2, Field::Rationals), 0);
        assert_eq!(rp2.reduced_cohomology(2, Field::Prime(2)), 1);
        assert_eq!(rp2.reduced_cohomology(1, Field::Prime(2)), 1);
    }

    #[test]
    fn subdivision_of_hollow_triangle() {
        let hollow = SimplicialComplex::new(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let sd = hollow.barycentric_subdivision().unwrap();
        assert_eq!(sd.f_vector(), vec![1, 6, 6]);
        assert_eq!(sd.reduced_cohomology(1, Field::Rationals), 1);
        let pt = SimplicialComplex::simplex(1);
        assert_eq!(pt.barycentric_subdivision().unwrap(), pt);
    }

    #[test]
    fn face_vector_examples() {
        let hollow = SimplicialComplex::new(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(face_vectors(&hollow), FaceVector { f: vec![1, 3, 3], h: vec![1, 1, 1] });
        assert_eq!(face_vectors(&SimplicialComplex::simplex(3)), FaceVector { f: vec![1, 3, 3, 1], h: vec![1, 0, 0, 0] });
        assert_eq!(face_vectors(&SimplicialComplex::from_masks(0, vec![0])).f, vec![1]);
    }

    #[test]
    fn kruskal_katona_examples() {
        assert!(kruskal_katona(&[1, 3, 3]));
        assert_eq!(is_f_vector(&[1, 3, 3]).unwrap().f_vector(), vec![1, 3, 3]);
        assert!(!kruskal_katona(&[1, 2, 4]));
        assert!(is_f_vector(&[1, 2, 4]).is_none());
        let w = is_f_vector(&[1, 2]).unwrap();
        assert_eq!(w.facets(), vec![vec![0], vec![1]]);
        assert!(kruskal_katona(&[1, 4, 6, 4, 1]));
        assert!(!kruskal_katona(&[1, 4, 6, 5]));
        assert!(is_f_vector(&[1, 4, 6, 5]).is_none());
    }
}
