use std::collections::VecDeque;

use serde::Serialize;

use super::complex::{mask_of, minimal_primes_squarefree};
use crate::error::AlgebraError;
use crate::groebner::{Ideal, MonomialIdeal};
use crate::resolve::hilbert_series;

/// Graph on the minimal primes; `{p, q}` is an edge iff
/// `height(p + q) = height(I) + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub height: usize,
}

impl DualGraph {
    /// Builds the graph from the pairwise heights `sum_height(a, b)`.
    pub fn from_heights(vertices: usize, height: usize, mut sum_height: impl FnMut(usize, usize) -> Result<usize, AlgebraError>) -> Result<Self, AlgebraError> {
        let mut edges = Vec::new();
        for a in 0..vertices {
            for b in a + 1..vertices {
                if sum_height(a, b)? == height + 1 {
                    edges.push((a, b));
                }
            }
        }
        Ok(DualGraph { vertices, edges, height })
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Largest distance between two vertices; `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let adj = self.adjacency();
        let mut best = 0;
        for s in 0..self.vertices {
            let mut dist = vec![usize::MAX; self.vertices];
            dist[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &v in &adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        q.push_back(v);
                    }
                }
            }
            if dist.contains(&usize::MAX) {
                return None;
            }
            best = best.max(*dist.iter().max().unwrap_or(&0));
        }
        Some(best)
    }

    pub fn is_connected(&self) -> bool {
        self.diameter().is_some()
    }

    /// Hirsch: connected with diameter at most `height(I)`.
    pub fn is_hirsch(&self) -> bool {
        self.diameter().is_some_and(|d| d <= self.height)
    }
}

/// Dual graph of monomial primes, given as variable sets.
pub fn dual_graph(primes: &[Vec<usize>], height: usize) -> Result<DualGraph, AlgebraError> {
    if let Some(p) = primes.iter().find(|p| p.len() != height) {
        return Err(AlgebraError::MixedHeights(format!("prime {p:?} has height {}, expected {height}", p.len())));
    }
    let masks: Vec<u64> = primes.iter().map(|p| mask_of(p)).collect();
    DualGraph::from_heights(primes.len(), height, |a, b| Ok((masks[a] | masks[b]).count_ones() as usize))
}

/// Dual graph of a user-supplied unmixed list of homogeneous primes.
/// Heights are `n - dim`, read off Hilbert series.
pub fn dual_graph_of_primes(primes: &[Ideal]) -> Result<DualGraph, AlgebraError> {
    let Some(first) = primes.first() else {
        return Ok(DualGraph { vertices: 0, edges: Vec::new(), height: 0 });
    };
    let n = first.ring().nvars();
    let height = |i: &Ideal| -> Result<usize, AlgebraError> {
        Ok(n - hilbert_series(i)?.dimension().ok_or_else(|| AlgebraError::Unsupported("unit ideal among primes".into()))?)
    };
    let hs: Vec<usize> = primes.iter().map(height).collect::<Result<_, _>>()?;
    if hs.iter().any(|&h| h != hs[0]) {
        return Err(AlgebraError::MixedHeights(format!("{hs:?}")));
    }
    DualGraph::from_heights(primes.len(), hs[0], |a, b| {
        let s = primes[a].sum(&primes[b]);
        Ok(if s.is_unit() { n + 1 } else { height(&s)? })
    })
}

/// Hirsch verdict for a square-free monomial ideal.
pub fn is_hirsch(m: &MonomialIdeal) -> Result<bool, AlgebraError> {
    Ok(squarefree_dual_graph(m)?.is_hirsch())
}

/// Dual graph of a square-free monomial ideal on its minimal primes, in
/// [`minimal_primes_squarefree`] order.
pub fn squarefree_dual_graph(m: &MonomialIdeal) -> Result<DualGraph, AlgebraError> {
    let primes = minimal_primes_squarefree(m)?;
    let height = primes.iter().map(|p| p.len()).min().unwrap_or(0);
    dual_graph(&primes, height)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, PolyRing};

    #[test]
    fn four_primes_form_a_path() {
        let primes = vec![vec![0, 1, 2], vec![0, 2, 5], vec![0, 1, 4], vec![0, 3, 4]];
        let g = dual_graph(&primes, 3).unwrap();
        assert_eq!(g.edges, vec![(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.diameter(), Some(3));
        assert!(g.is_hirsch());
    }

    #[test]
    fn degenerate_graphs() {
        let g = dual_graph(&[vec![0, 1]], 2).unwrap();
        assert_eq!(g.diameter(), Some(0));
        assert!(g.is_hirsch());
        let g = dual_graph(&[vec![0, 1], vec![2, 3]], 2).unwrap();
        assert_eq!(g.diameter(), None);
        assert!(!g.is_hirsch());
        assert!(matches!(dual_graph(&[vec![0], vec![1, 2]], 1), Err(AlgebraError::MixedHeights(_))));
    }

    #[test]
    fn primes_given_as_ideals() {
        let r = PolyRing::standard(4, Field::Rationals);
        let p = Ideal::parse(&r, &["x1", "x2"]).unwrap();
        let q = Ideal::parse(&r, &["x2", "x3"]).unwrap();
        let g = dual_graph_of_primes(&[p, q]).unwrap();
        assert_eq!((g.height, g.edges.clone()), (2, vec![(0, 1)]));
    }

    #[test]
    fn mixed_heights_rejected_for_monomial_ideals() {
        let r = PolyRing::standard(3, Field::Rationals);
        let m = MonomialIdeal::parse(&r, &["x1*x2", "x1*x3"]).unwrap();
        assert!(matches!(is_hirsch(&m), Err(AlgebraError::MixedHeights(_))));
    }
}
