//! Growth digraphs and the arc decomposition of `L(D)` they induce.
//!
//! The growth of `D` derived by a spanning subdigraph `H` keeps the arcs of
//! `H` and, at each vertex, hangs one fresh sink for every arc of `D` that
//! `H` dropped there. For a dicycle factor `H_j`, each sink replaces an arc
//! `(u, m)` of some other factor `H_l` and is named `l·n + m`; the original
//! vertex `v` is named `j·n + v`. Under those names the adjacency matrix of
//! the growth is zero except for block-row `j`, which reads
//! `[M(H_0) ... M(H_{d-1})]`.

use alloc::format;
use alloc::vec::Vec;

use super::{line_digraph, spiked::head_isomorphism, structured_product};
use crate::digraph::disjoint_union;
use crate::factorization::{dicycle_factorization, orbits};
use crate::matrix::similarity;
use crate::{
    ArcId, DicycleFactorization, Digraph, Error, Permutation, Result, VerificationReport,
    ZeroOneMatrix,
};

use super::spiked::{lemma2_isomorphism, spiked_dicycle};

/// A growth digraph. Vertices `0..n` are those of `D`; vertex `n + k` is
/// the sink standing in for arc `spikes[k]` of `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Growth {
    digraph: Digraph,
    base: usize,
    spikes: Vec<ArcId>,
}

impl Growth {
    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    /// The arc of `D` replaced by new vertex `v`, or `None` for an
    /// original vertex.
    pub fn spike_origin(&self, v: usize) -> Option<ArcId> {
        v.checked_sub(self.base).map(|k| self.spikes[k])
    }

    pub fn added_vertices(&self) -> usize {
        self.spikes.len()
    }
}

/// Sinks are numbered by tail, then by head of the replaced arc.
pub fn growth(d: &Digraph, h: &Digraph) -> Result<Growth> {
    if h.vertex_count() != d.vertex_count() {
        return Err(Error::NotSpanningSubdigraph("vertex sets differ"));
    }
    if !h.is_spanning_subdigraph(d) {
        return Err(Error::NotSpanningSubdigraph("arc missing from the digraph"));
    }
    let n = d.vertex_count();
    let mut arcs: Vec<(usize, usize)> = h.arcs().to_vec();
    let mut spikes = Vec::with_capacity(d.arc_count() - h.arc_count());
    for (id, &(u, v)) in d.arcs().iter().enumerate() {
        if !h.has_arc(u, v) {
            arcs.push((u, n + spikes.len()));
            spikes.push(ArcId(id));
        }
    }
    Ok(Growth {
        digraph: Digraph::new(n + spikes.len(), arcs)?,
        base: n,
        spikes,
    })
}

/// Growth of `D` by factor `j`, with vertices named in `0..n·d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorGrowth {
    factor: usize,
    growth: Growth,
    labels: Permutation,
}

impl FactorGrowth {
    pub fn factor(&self) -> usize {
        self.factor
    }

    pub fn growth(&self) -> &Growth {
        &self.growth
    }

    /// Growth vertex to its `l·n + m` name.
    pub fn labels(&self) -> &Permutation {
        &self.labels
    }

    /// Adjacency matrix under the `l·n + m` names.
    pub fn matrix(&self) -> ZeroOneMatrix {
        similarity(&self.labels, &self.growth.digraph.adjacency_matrix())
            .expect("labels cover the growth")
    }
}

pub fn factor_growth(d: &Digraph, f: &DicycleFactorization, j: usize) -> Result<FactorGrowth> {
    f.check_against(d)?;
    if j >= f.degree() {
        return Err(Error::InvalidParameter("factor index out of range"));
    }
    let n = d.vertex_count();
    let g = growth(d, &f.factor_digraph(j))?;
    let mut labels: Vec<usize> = (0..n).map(|v| j * n + v).collect();
    for &id in &g.spikes {
        let (u, m) = d.arc(id);
        let l = f.factor_of(u, m).expect("checked against digraph");
        labels.push(l * n + m);
    }
    Ok(FactorGrowth {
        factor: j,
        growth: g,
        labels: Permutation::new(labels)?,
    })
}

/// Results of checking that the factor growths decompose `L(D)`.
#[derive(Debug, Clone)]
pub struct DecompositionCheck {
    /// The growth matrices never overlap: their sum is 0/1.
    pub disjoint_supports: VerificationReport,
    /// Their sum is `(J_d ⊗ I_n) · ⊕ M(H_i)`.
    pub sum_is_structured_product: VerificationReport,
    /// Per factor: the growth is the disjoint union of `(d-1)`-spiked
    /// dicycles, one per orbit.
    pub spiked_unions: Vec<VerificationReport>,
    /// Per factor: the growth is isomorphic to its own line digraph.
    pub line_self_isomorphisms: Vec<VerificationReport>,
    /// Per factor and orbit: the spiked dicycle of that orbit is
    /// isomorphic to its line digraph.
    pub orbit_isomorphisms: Vec<VerificationReport>,
}

impl DecompositionCheck {
    pub fn reports(&self) -> impl Iterator<Item = &VerificationReport> {
        [&self.disjoint_supports, &self.sum_is_structured_product]
            .into_iter()
            .chain(&self.spiked_unions)
            .chain(&self.line_self_isomorphisms)
            .chain(&self.orbit_isomorphisms)
    }

    pub fn passed(&self) -> bool {
        self.reports().all(VerificationReport::is_equal)
    }
}

// Maps the vertices of the disjoint union of spiked dicycles (one per orbit
// of factor j, in orbit order) onto the named growth vertices.
fn spiked_union_labels(
    fg: &FactorGrowth,
    cycles: &[Vec<usize>],
    spikes: usize,
) -> Result<Permutation> {
    let g = fg.growth.digraph();
    let n = fg.growth.base;
    let mut map = Vec::with_capacity(g.vertex_count());
    for cycle in cycles {
        let c = cycle.len();
        let start = map.len();
        map.extend(cycle.iter().map(|&v| fg.labels.apply(v)));
        map.resize(start + c * (1 + spikes), usize::MAX);
        for (t, &v) in cycle.iter().enumerate() {
            let sinks: Vec<usize> = g.out_neighbors(v).filter(|&w| w >= n).collect();
            if sinks.len() != spikes {
                return Err(Error::InconsistentFactorization(
                    "growth vertex has the wrong number of spikes",
                ));
            }
            for (r, w) in sinks.into_iter().enumerate() {
                map[start + c + t * spikes + r] = fg.labels.apply(w);
            }
        }
    }
    Permutation::new(map)
}

/// Builds every factor growth of `D` for the given factorization and checks
/// that they partition `L(D)` into spiked-dicycle pieces.
pub fn verify_growth_decomposition_with(
    d: &Digraph,
    f: &DicycleFactorization,
) -> Result<DecompositionCheck> {
    f.check_against(d)?;
    let degree = f.degree();
    if degree == 0 {
        return Err(Error::ZeroDegree);
    }
    let nd = d.vertex_count() * degree;
    let spikes = degree - 1;

    let mut sum = ZeroOneMatrix::zeros(nd, nd);
    let mut spiked_unions = Vec::with_capacity(degree);
    let mut line_self_isomorphisms = Vec::with_capacity(degree);
    let mut orbit_isomorphisms = Vec::new();

    for j in 0..degree {
        let fg = factor_growth(d, f, j)?;
        let m = fg.matrix();
        sum = sum.add(&m)?;

        let cycles = orbits(f.factor(j));
        let parts = cycles
            .iter()
            .map(|c| spiked_dicycle(c.len(), spikes))
            .collect::<Result<Vec<_>>>()?;
        let (union, _) = disjoint_union(&parts);
        let q = spiked_union_labels(&fg, &cycles, spikes)?;
        spiked_unions.push(VerificationReport::compare(
            format!("decomposition-spiked-union[{j}]"),
            m.clone(),
            similarity(&q, &union.adjacency_matrix())?,
        ));

        let g = fg.growth().digraph();
        let line = line_digraph(g)?;
        let to_names = head_isomorphism(g, &line)?.then(fg.labels());
        line_self_isomorphisms.push(VerificationReport::compare(
            format!("decomposition-line-self-iso[{j}]"),
            similarity(&to_names, &line.digraph().adjacency_matrix())?,
            m,
        ));

        for (o, cycle) in cycles.iter().enumerate() {
            let (_, mut report) = lemma2_isomorphism(cycle.len(), spikes)?;
            report = VerificationReport::compare(
                format!("decomposition-orbit[{j}:{o}]"),
                report.lhs().clone(),
                report.rhs().clone(),
            );
            orbit_isomorphisms.push(report);
        }
    }

    Ok(DecompositionCheck {
        disjoint_supports: VerificationReport::compare(
            "decomposition-disjoint",
            sum.clone(),
            sum.support(),
        ),
        sum_is_structured_product: VerificationReport::compare(
            "decomposition-sum",
            sum,
            structured_product(f),
        ),
        spiked_unions,
        line_self_isomorphisms,
        orbit_isomorphisms,
    })
}

/// [`verify_growth_decomposition_with`] using the matching-based
/// factorization.
pub fn verify_growth_decomposition(d: &Digraph) -> Result<DecompositionCheck> {
    let f = dicycle_factorization(d)?;
    verify_growth_decomposition_with(d, &f)
}
