use alloc::format;
use alloc::vec::Vec;

use super::{line_digraph, LineDigraph};
use crate::matrix::similarity;
use crate::{Digraph, Error, Permutation, Result, VerificationReport};

/// The dicycle `0 -> 1 -> ... -> n-1 -> 0` with `s` sink vertices hanging
/// off each cycle vertex. Spike `r` of cycle vertex `i` is `n + i·s + r`.
pub fn spiked_dicycle(n: usize, s: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::InvalidParameter("spiked dicycle needs n >= 1"));
    }
    let mut arcs = Vec::with_capacity(n * (1 + s));
    for i in 0..n {
        arcs.push((i, (i + 1) % n));
        arcs.extend((0..s).map(|r| (i, n + i * s + r)));
    }
    Digraph::new(n * (1 + s), arcs)
}

/// Sends each vertex of `line` (an arc of `d`) to the head of that arc.
///
/// This is a bijection exactly when every vertex of `d` has in-degree 1,
/// and then it is an isomorphism `L(d) -> d`: the line arc `(a, b)` goes to
/// `b` itself. Spiked dicycles, their disjoint unions and growth digraphs
/// of dicycle factors all have in-degree 1.
pub fn head_isomorphism(d: &Digraph, line: &LineDigraph) -> Result<Permutation> {
    let heads: Vec<usize> = (0..line.digraph().vertex_count())
        .map(|x| d.arc(line.origin(x)).1)
        .collect();
    if heads.len() != d.vertex_count() {
        return Err(Error::NotPermutation("arc count differs from vertex count"));
    }
    Permutation::new(heads)
}

/// Builds the explicit isomorphism from `L(D)` to `D` for the `s`-spiked
/// `n`-dicycle `D` (cycle arc `(i-1, i) ↦ i`, spike arc `(i, w) ↦ w`) and
/// checks it entrywise.
pub fn lemma2_isomorphism(n: usize, s: usize) -> Result<(Permutation, VerificationReport)> {
    let d = spiked_dicycle(n, s)?;
    let line = line_digraph(&d)?;
    let p = head_isomorphism(&d, &line)?;
    let report = VerificationReport::compare(
        format!("lemma2[n={n},s={s}]"),
        similarity(&p, &line.digraph().adjacency_matrix())?,
        d.adjacency_matrix(),
    );
    Ok((p, report))
}
