//! Line digraphs and the block structure of their adjacency matrices.
//!
//! With a dicycle factorization `H_0, ..., H_{d-1}` of a `d`-regular digraph
//! `D` on `n` vertices, give the arc `(u, v)` of `H_j` the label `j·n + v`.
//! Row `j·n + v` of the relabelled line digraph then lists the arcs leaving
//! `v`, and the arc `(v, w)` of `H_l` sits in column `l·n + w`, so block
//! `(j, l)` is `M(H_l)` for every `j`. That block matrix is
//! `(J_d ⊗ I_n) · (M(H_0) ⊕ ... ⊕ M(H_{d-1}))`.

mod growth;
mod spiked;

use alloc::vec::Vec;

use crate::factorization::dicycle_factorization;
use crate::matrix::{direct_sum, kron, matmul, similarity};
use crate::{
    ArcId, DicycleFactorization, Digraph, Error, Permutation, Result, VerificationReport,
    ZeroOneMatrix,
};

pub use growth::{
    factor_growth, growth, verify_growth_decomposition, DecompositionCheck, FactorGrowth, Growth,
};
pub use spiked::{head_isomorphism, lemma2_isomorphism, spiked_dicycle};

/// `L(D)` together with the arc of `D` behind each of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineDigraph {
    digraph: Digraph,
    origin: Vec<ArcId>,
}

impl LineDigraph {
    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn into_digraph(self) -> Digraph {
        self.digraph
    }

    /// The arc of the source digraph represented by vertex `x`.
    pub fn origin(&self, x: usize) -> ArcId {
        self.origin[x]
    }
}

/// One vertex per arc of `d` in [`ArcId`] order, and an arc `a -> b`
/// whenever the head of `a` is the tail of `b`.
pub fn line_digraph(d: &Digraph) -> Result<LineDigraph> {
    if d.arc_count() == 0 {
        return Err(Error::EmptyArcSet);
    }
    let mut arcs = Vec::new();
    for (a, &(_, head)) in d.arcs().iter().enumerate() {
        arcs.extend(d.out_arc_ids(head).map(|b| (a, b)));
    }
    // generated in (a, b) order already
    Ok(LineDigraph {
        digraph: Digraph::from_sorted(d.arc_count(), arcs),
        origin: (0..d.arc_count()).map(ArcId).collect(),
    })
}

/// `L^k(D)` with every vertex decoded to the walk of `k` arcs in `D` it
/// stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IteratedLineDigraph {
    digraph: Digraph,
    steps: usize,
    walks: Vec<Vec<usize>>,
}

impl IteratedLineDigraph {
    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    /// Vertex sequence (`steps + 1` vertices of `D`) of the walk behind `x`.
    pub fn walk(&self, x: usize) -> &[usize] {
        &self.walks[x]
    }
}

pub fn iterated_line_digraph(d: &Digraph, k: usize) -> Result<IteratedLineDigraph> {
    let mut current = d.clone();
    let mut walks: Vec<Vec<usize>> = (0..d.vertex_count()).map(|v| alloc::vec![v]).collect();
    for _ in 0..k {
        let line = line_digraph(&current)?;
        // vertex x of the new level is arc (a, b) of the previous one; the
        // walks of a and b overlap in all but their end vertices
        walks = (0..line.digraph.vertex_count())
            .map(|x| {
                let (a, b) = current.arc(line.origin(x));
                let mut w = walks[a].clone();
                w.push(*walks[b].last().expect("walks are non-empty"));
                w
            })
            .collect();
        current = line.digraph;
    }
    Ok(IteratedLineDigraph {
        digraph: current,
        steps: k,
        walks,
    })
}

/// Bijection from the arcs of `D` to `0..n·d`: arc `(u, v)` of factor `j`
/// gets `j·n + v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcLabeling {
    n: usize,
    degree: usize,
    labels: Permutation,
}

impl ArcLabeling {
    pub fn label(&self, arc: ArcId) -> usize {
        self.labels.apply(arc.0)
    }

    /// As a permutation from [`ArcId`] order to label order.
    pub fn permutation(&self) -> &Permutation {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

pub fn canonical_labeling(d: &Digraph, f: &DicycleFactorization) -> Result<ArcLabeling> {
    f.check_against(d)?;
    let n = d.vertex_count();
    let mut labels = alloc::vec![usize::MAX; d.arc_count()];
    for (j, p) in f.factors().iter().enumerate() {
        for u in 0..n {
            let v = p.apply(u);
            let id = d.arc_id(u, v).expect("checked against digraph");
            labels[id.0] = j * n + v;
        }
    }
    Ok(ArcLabeling {
        n,
        degree: f.degree(),
        labels: Permutation::new(labels)?,
    })
}

/// `M(L(D))` with rows and columns renamed by `labeling`.
pub fn relabeled_line_matrix(line: &LineDigraph, labeling: &ArcLabeling) -> Result<ZeroOneMatrix> {
    similarity(labeling.permutation(), &line.digraph().adjacency_matrix())
}

/// `(J_d ⊗ I_n) · (M(H_0) ⊕ ... ⊕ M(H_{d-1}))`.
pub fn structured_product(f: &DicycleFactorization) -> ZeroOneMatrix {
    let a = kron(
        &ZeroOneMatrix::ones(f.degree()),
        &ZeroOneMatrix::identity(f.vertex_count()),
    );
    let b = direct_sum(&f.matrices());
    matmul(&a, &b).expect("nd x nd operands")
}

/// Checks `M(L(D)) = (J_d ⊗ I_n) · ⊕ M(H_i)` under the canonical labeling
/// for a specific factorization of `d`.
pub fn verify_theorem_with(d: &Digraph, f: &DicycleFactorization) -> Result<VerificationReport> {
    let labeling = canonical_labeling(d, f)?;
    let line = line_digraph(d)?;
    Ok(VerificationReport::compare(
        "theorem",
        relabeled_line_matrix(&line, &labeling)?,
        structured_product(f),
    ))
}

/// [`verify_theorem_with`] using the matching-based factorization.
pub fn verify_theorem(d: &Digraph) -> Result<VerificationReport> {
    let f = dicycle_factorization(d)?;
    verify_theorem_with(d, &f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topologies::complete_digraph_with_loops;

    fn n_k2() -> ZeroOneMatrix {
        ZeroOneMatrix::from_rows(&[[1, 0, 0, 1], [0, 1, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0]]).unwrap()
    }

    #[test]
    fn line_of_dicycle_is_dicycle() {
        let l = line_digraph(&Digraph::dicycle(3)).unwrap();
        // arcs (0,1),(1,2),(2,0) are vertices 0,1,2
        assert_eq!(l.digraph().arcs(), &[(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn line_of_k2_plus() {
        let l = line_digraph(&complete_digraph_with_loops(2).unwrap()).unwrap();
        // arcs 0:(0,0) 1:(0,1) 2:(1,0) 3:(1,1)
        assert_eq!(
            l.digraph().arcs(),
            &[
                (0, 0),
                (0, 1),
                (1, 2),
                (1, 3),
                (2, 0),
                (2, 1),
                (3, 2),
                (3, 3)
            ]
        );
        assert_eq!(l.digraph().regularity(), Some(2));
    }

    #[test]
    fn line_of_loop_and_empty() {
        let l = line_digraph(&Digraph::dicycle(1)).unwrap();
        assert_eq!(l.digraph(), &Digraph::dicycle(1));
        assert_eq!(line_digraph(&Digraph::empty(3)), Err(Error::EmptyArcSet));
    }

    #[test]
    fn iterated_examples() {
        let d = Digraph::new(3, [(0, 1), (1, 2), (2, 0), (0, 0)]).unwrap();
        let zero = iterated_line_digraph(&d, 0).unwrap();
        assert_eq!(zero.digraph(), &d);
        assert_eq!(zero.walk(2), &[2]);

        let k2 = complete_digraph_with_loops(2).unwrap();
        let two = iterated_line_digraph(&k2, 2).unwrap();
        assert_eq!(two.digraph().vertex_count(), 8);
        assert_eq!(two.walk(0), &[0, 0, 0]);
        assert_eq!(two.walk(7), &[1, 1, 1]);

        let c5 = iterated_line_digraph(&Digraph::dicycle(5), 3).unwrap();
        assert_eq!(c5.digraph().vertex_count(), 5);
        assert_eq!(c5.digraph().regularity(), Some(1));
    }

    #[test]
    fn iterated_walks_follow_arcs() {
        let d = Digraph::new(3, [(0, 1), (1, 2), (2, 0), (0, 0), (1, 1)]).unwrap();
        let it = iterated_line_digraph(&d, 3).unwrap();
        for x in 0..it.digraph().vertex_count() {
            let w = it.walk(x);
            assert_eq!(w.len(), 4);
            assert!(w.windows(2).all(|p| d.has_arc(p[0], p[1])));
        }
        for &(x, y) in it.digraph().arcs() {
            assert_eq!(it.walk(x)[1..], it.walk(y)[..3]);
        }
    }

    #[test]
    fn canonical_labeling_k2_plus() {
        let k2 = complete_digraph_with_loops(2).unwrap();
        let f = DicycleFactorization::new(alloc::vec![
            Permutation::identity(2),
            Permutation::new([1, 0]).unwrap(),
        ])
        .unwrap();
        let lab = canonical_labeling(&k2, &f).unwrap();
        let label = |u, v| lab.label(k2.arc_id(u, v).unwrap());
        assert_eq!(label(0, 0), 0);
        assert_eq!(label(1, 1), 1);
        assert_eq!(label(1, 0), 2);
        assert_eq!(label(0, 1), 3);
    }

    #[test]
    fn canonical_labeling_dicycle_is_head() {
        let c = Digraph::dicycle(6);
        let f = dicycle_factorization(&c).unwrap();
        let lab = canonical_labeling(&c, &f).unwrap();
        for i in 0..6 {
            assert_eq!(lab.label(c.arc_id(i, (i + 1) % 6).unwrap()), (i + 1) % 6);
        }
    }

    #[test]
    fn canonical_labeling_rejects_foreign_factorization() {
        let f =
            DicycleFactorization::new(alloc::vec![Permutation::new([1, 2, 0]).unwrap()]).unwrap();
        let other = Digraph::new(3, [(0, 2), (2, 1), (1, 0)]).unwrap();
        assert!(matches!(
            canonical_labeling(&other, &f),
            Err(Error::InconsistentFactorization(_))
        ));
    }

    #[test]
    fn structured_product_examples() {
        let f = DicycleFactorization::new(alloc::vec![
            Permutation::identity(2),
            Permutation::new([1, 0]).unwrap(),
        ])
        .unwrap();
        assert_eq!(structured_product(&f), n_k2());

        let p = Permutation::new([3, 0, 1, 2]).unwrap();
        let single = DicycleFactorization::new(alloc::vec![p.clone()]).unwrap();
        assert_eq!(structured_product(&single), p.to_matrix());
    }

    #[test]
    fn theorem_k2_plus_and_dicycle() {
        let r = verify_theorem(&complete_digraph_with_loops(2).unwrap()).unwrap();
        assert!(r.is_equal());
        assert_eq!(r.lhs(), &n_k2());
        assert_eq!(r.rhs(), &n_k2());

        let c7 = Digraph::dicycle(7);
        let r = verify_theorem(&c7).unwrap();
        assert!(r.is_equal());
        assert_eq!(r.rhs(), &c7.adjacency_matrix());
    }

    #[test]
    fn theorem_rejects_non_regular() {
        let path = Digraph::new(2, [(0, 1)]).unwrap();
        assert!(matches!(
            verify_theorem(&path),
            Err(Error::NotRegular { .. })
        ));
    }
}
