//! Simple digraphs with loops and a canonical arc order.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Permutation, Result, ZeroOneMatrix};

/// Index into the canonical (lexicographic) arc list of one digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcId(pub usize);

/// Digraph on vertices `0..n` without multiple arcs. Loops are allowed.
///
/// Arcs are kept sorted by `(tail, head)`, so [`ArcId`]s and every derived
/// labelling are deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    // offsets[u]..offsets[u + 1] are the arcs with tail u
    offsets: Vec<usize>,
}

impl Digraph {
    /// Builds a digraph; duplicate arcs collapse to one.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut arcs: Vec<_> = arcs.into_iter().collect();
        if let Some(&(tail, head)) = arcs.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::VertexOutOfRange { tail, head, n });
        }
        arcs.sort_unstable();
        arcs.dedup();
        Ok(Self::from_sorted(n, arcs))
    }

    /// `arcs` must already be sorted, deduplicated and in range.
    pub(crate) fn from_sorted(n: usize, arcs: Vec<(usize, usize)>) -> Self {
        debug_assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(arcs.iter().all(|&(u, v)| u < n && v < n));
        let mut offsets = vec![0; n + 1];
        for &(u, _) in &arcs {
            offsets[u + 1] += 1;
        }
        for u in 0..n {
            offsets[u + 1] += offsets[u];
        }
        Self { n, arcs, offsets }
    }

    /// Vertices and no arcs.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    /// The `n`-dicycle `0 -> 1 -> ... -> n-1 -> 0`; for `n = 1` a single loop.
    pub fn dicycle(n: usize) -> Self {
        let mut arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        arcs.sort_unstable();
        Self::from_sorted(n, arcs)
    }

    /// The dicycle factor `i -> p(i)`.
    pub fn from_permutation(p: &Permutation) -> Self {
        let arcs = p.as_slice().iter().copied().enumerate().collect();
        Self::from_sorted(p.len(), arcs)
    }

    /// Digraph whose arcs are the nonzero entries of a square matrix.
    pub fn from_adjacency(m: &ZeroOneMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if let Some((row, col, value)) = m.nonzeros().find(|&(_, _, v)| v > 1) {
            return Err(Error::NotZeroOne { row, col, value });
        }
        let arcs = m.nonzeros().map(|(i, j, _)| (i, j)).collect();
        Ok(Self::from_sorted(m.rows(), arcs))
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    #[inline]
    pub fn arc(&self, id: ArcId) -> (usize, usize) {
        self.arcs[id.0]
    }

    pub fn arc_id(&self, tail: usize, head: usize) -> Option<ArcId> {
        if tail >= self.n {
            return None;
        }
        let lo = self.offsets[tail];
        self.arcs[lo..self.offsets[tail + 1]]
            .binary_search(&(tail, head))
            .ok()
            .map(|k| ArcId(lo + k))
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        self.arc_id(tail, head).is_some()
    }

    /// Range of [`ArcId`]s whose tail is `u`, in ascending head order.
    pub fn out_arc_ids(&self, u: usize) -> core::ops::Range<usize> {
        self.offsets[u]..self.offsets[u + 1]
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.arcs[self.out_arc_ids(u)].iter().map(|&(_, v)| v)
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(_, v) in &self.arcs {
            deg[v] += 1;
        }
        deg
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.out_degree(u)).collect()
    }

    /// `Some(d)` when every vertex has in-degree and out-degree `d`.
    /// A digraph without vertices is reported as not regular.
    pub fn regularity(&self) -> Option<usize> {
        self.irregular_vertex().err()
    }

    /// Like [`Digraph::regularity`] but names a vertex whose degrees break
    /// regularity (either unequal, or different from vertex 0's).
    pub fn require_regular(&self) -> Result<usize> {
        match self.irregular_vertex() {
            Err(d) => Ok(d),
            Ok((vertex, in_degree, out_degree)) => Err(Error::NotRegular {
                vertex,
                in_degree,
                out_degree,
            }),
        }
    }

    // Ok(witness) when irregular, Err(d) when regular.
    fn irregular_vertex(&self) -> core::result::Result<(usize, usize, usize), usize> {
        if self.n == 0 {
            return Ok((0, 0, 0));
        }
        let ins = self.in_degrees();
        let d = self.out_degree(0);
        for (v, &indeg) in ins.iter().enumerate() {
            let outdeg = self.out_degree(v);
            if indeg != d || outdeg != d {
                return Ok((v, indeg, outdeg));
            }
        }
        Err(d)
    }

    /// `M[u, v] = 1` iff `(u, v)` is an arc.
    pub fn adjacency_matrix(&self) -> ZeroOneMatrix {
        let mut m = ZeroOneMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.arcs {
            m.set(u, v, 1);
        }
        m
    }

    /// Same digraph with vertex `v` renamed to `p(v)`.
    pub fn relabel(&self, p: &Permutation) -> Result<Self> {
        if p.len() != self.n {
            return Err(Error::DimensionMismatch {
                op: "relabel",
                left: (p.len(), p.len()),
                right: (self.n, self.n),
            });
        }
        let mut arcs: Vec<_> = self
            .arcs
            .iter()
            .map(|&(u, v)| (p.apply(u), p.apply(v)))
            .collect();
        arcs.sort_unstable();
        Ok(Self::from_sorted(self.n, arcs))
    }

    /// True iff same vertex set and every arc of `self` is an arc of `of`.
    pub fn is_spanning_subdigraph(&self, of: &Self) -> bool {
        self.n == of.n && self.arcs.iter().all(|&(u, v)| of.has_arc(u, v))
    }
}

/// Vertex-disjoint union. Part `i`'s local vertex `v` becomes
/// `offsets[i] + v`; `offsets` has one entry per part.
pub fn disjoint_union(parts: &[Digraph]) -> (Digraph, Vec<usize>) {
    let mut offsets = Vec::with_capacity(parts.len());
    let mut arcs = Vec::with_capacity(parts.iter().map(Digraph::arc_count).sum());
    let mut base = 0;
    for part in parts {
        offsets.push(base);
        arcs.extend(part.arcs.iter().map(|&(u, v)| (u + base, v + base)));
        base += part.n;
    }
    (Digraph::from_sorted(base, arcs), offsets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::direct_sum;

    #[test]
    fn build_and_canonical_order() {
        let c3 = Digraph::new(3, [(2, 0), (0, 1), (1, 2), (0, 1)]).unwrap();
        assert_eq!(c3.arcs(), &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(c3, Digraph::dicycle(3));
        assert_eq!(c3.arc_id(1, 2), Some(ArcId(1)));
        assert_eq!(c3.arc_id(1, 0), None);

        let k1 = Digraph::new(1, [(0, 0)]).unwrap();
        assert_eq!(k1.arc_count(), 1);
        assert_eq!(k1.regularity(), Some(1));

        assert_eq!(
            Digraph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange {
                tail: 0,
                head: 2,
                n: 2
            })
        );
    }

    #[test]
    fn adjacency_examples() {
        let expect = ZeroOneMatrix::from_rows(&[[0, 1, 0], [0, 0, 1], [1, 0, 0]]).unwrap();
        assert_eq!(Digraph::dicycle(3).adjacency_matrix(), expect);
        let k2 = Digraph::new(2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        assert_eq!(k2.adjacency_matrix(), ZeroOneMatrix::ones(2));
        assert!(Digraph::empty(2).adjacency_matrix().is_zero());
        assert_eq!(Digraph::from_adjacency(&k2.adjacency_matrix()).unwrap(), k2);
        let two = ZeroOneMatrix::from_rows(&[[2]]).unwrap();
        assert!(Digraph::from_adjacency(&two).is_err());
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(Digraph::dicycle(5).regularity(), Some(1));
        let k3 = Digraph::from_adjacency(&ZeroOneMatrix::ones(3)).unwrap();
        assert_eq!(k3.regularity(), Some(3));
        let path = Digraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(path.regularity(), None);
        assert_eq!(
            path.require_regular(),
            Err(Error::NotRegular {
                vertex: 0,
                in_degree: 0,
                out_degree: 1
            })
        );
        assert_eq!(Digraph::empty(3).regularity(), Some(0));
        assert_eq!(Digraph::empty(0).regularity(), None);
    }

    #[test]
    fn disjoint_union_examples() {
        let (u, offsets) = disjoint_union(&[Digraph::dicycle(2), Digraph::dicycle(3)]);
        assert_eq!(u.vertex_count(), 5);
        assert_eq!(u.arcs(), &[(0, 1), (1, 0), (2, 3), (3, 4), (4, 2)]);
        assert_eq!(offsets, [0, 2]);
        assert_eq!(
            u.adjacency_matrix(),
            direct_sum(&[
                Digraph::dicycle(2).adjacency_matrix(),
                Digraph::dicycle(3).adjacency_matrix()
            ])
        );

        let d = Digraph::dicycle(4);
        let (single, offsets) = disjoint_union(core::slice::from_ref(&d));
        assert_eq!(single, d);
        assert_eq!(offsets, [0]);

        let (empty, offsets) = disjoint_union(&[]);
        assert_eq!(empty.vertex_count(), 0);
        assert!(offsets.is_empty());
    }

    #[test]
    fn relabel_matches_similarity() {
        let d = Digraph::new(4, [(0, 1), (1, 1), (2, 3), (3, 0)]).unwrap();
        let p = Permutation::new([3, 1, 0, 2]).unwrap();
        assert_eq!(
            d.relabel(&p).unwrap().adjacency_matrix(),
            crate::matrix::similarity(&p, &d.adjacency_matrix()).unwrap()
        );
    }
}
