//! Dicycle factorizations of regular digraphs.
//!
//! A `d`-regular digraph is a `d`-regular bipartite graph between tails and
//! heads, so it always has a perfect matching; removing one leaves a
//! `(d-1)`-regular digraph. Repeating `d` times peels the arc set into `d`
//! permutations.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::matrix::direct_sum;
use crate::{Digraph, Error, Permutation, Result, ZeroOneMatrix};

/// Resamples allowed per factor before random generation gives up.
pub const MAX_RETRIES_PER_FACTOR: usize = 1000;

const NONE: usize = usize::MAX;

/// Partial injective map from left vertices (rows) to right vertices
/// (columns).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    left_to_right: Vec<Option<usize>>,
}

impl Matching {
    pub fn get(&self, left: usize) -> Option<usize> {
        self.left_to_right[left]
    }

    pub fn size(&self) -> usize {
        self.left_to_right.iter().flatten().count()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.left_to_right
            .iter()
            .enumerate()
            .filter_map(|(l, r)| r.map(|r| (l, r)))
    }

    pub fn is_perfect(&self) -> bool {
        self.left_to_right.iter().all(Option::is_some)
    }
}

/// Hopcroft–Karp. Vertices and adjacency lists are scanned in the given
/// order, so the result is deterministic.
fn hopcroft_karp(adj: &[Vec<usize>], right: usize) -> (Vec<usize>, Vec<usize>) {
    let left = adj.len();
    let mut mate_l = vec![NONE; left];
    let mut mate_r = vec![NONE; right];
    let mut dist = vec![NONE; left];
    let mut cursor = vec![0usize; left];
    let mut queue = VecDeque::new();
    let mut stack = Vec::new();

    loop {
        queue.clear();
        for u in 0..left {
            if mate_l[u] == NONE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = NONE;
            }
        }
        let mut reachable_free = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = mate_r[v];
                if w == NONE {
                    reachable_free = true;
                } else if dist[w] == NONE {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !reachable_free {
            break;
        }

        cursor.fill(0);
        for root in 0..left {
            if mate_l[root] != NONE {
                continue;
            }
            stack.clear();
            stack.push(root);
            while let Some(&u) = stack.last() {
                let Some(&v) = adj[u].get(cursor[u]) else {
                    dist[u] = NONE;
                    stack.pop();
                    continue;
                };
                cursor[u] += 1;
                let w = mate_r[v];
                if w == NONE {
                    // flip the alternating path recorded on the stack
                    for &x in stack.iter().rev() {
                        let y = adj[x][cursor[x] - 1];
                        mate_l[x] = y;
                        mate_r[y] = x;
                    }
                    break;
                } else if dist[w] != NONE && dist[w] == dist[u] + 1 {
                    stack.push(w);
                }
            }
        }
    }
    (mate_l, mate_r)
}

fn adjacency_lists(b: &ZeroOneMatrix) -> Vec<Vec<usize>> {
    (0..b.rows())
        .map(|i| {
            b.row(i)
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(j, _)| j)
                .collect()
        })
        .collect()
}

/// Maximum matching of the bipartite graph rows × columns whose edges are
/// the nonzero entries of `b`.
pub fn maximum_matching(b: &ZeroOneMatrix) -> Matching {
    let (mate_l, _) = hopcroft_karp(&adjacency_lists(b), b.cols());
    Matching {
        left_to_right: mate_l
            .into_iter()
            .map(|r| (r != NONE).then_some(r))
            .collect(),
    }
}

// Left vertices reachable from a free left vertex by alternating paths.
// Their neighbourhood is exactly the matched right vertices reached, one
// fewer than the set itself.
fn hall_witness(
    adj: &[Vec<usize>],
    mate_l: &[usize],
    mate_r: &[usize],
    free: usize,
) -> (Vec<usize>, usize) {
    let mut seen_l = vec![false; adj.len()];
    let mut seen_r = vec![false; mate_r.len()];
    let mut queue = VecDeque::from([free]);
    seen_l[free] = true;
    let mut neighbours = 0;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !core::mem::replace(&mut seen_r[v], true) {
                neighbours += 1;
                let w = mate_r[v];
                debug_assert_ne!(w, NONE, "maximum matching left an augmenting path");
                if w != NONE && !core::mem::replace(&mut seen_l[w], true) {
                    queue.push_back(w);
                }
            }
        }
    }
    debug_assert_eq!(mate_l[free], NONE);
    let witness = (0..adj.len()).filter(|&u| seen_l[u]).collect();
    (witness, neighbours)
}

fn perfect_matching_on(adj: &[Vec<usize>], n: usize) -> Result<Permutation> {
    let (mate_l, mate_r) = hopcroft_karp(adj, n);
    if let Some(free) = mate_l.iter().position(|&r| r == NONE) {
        let (witness, neighbours) = hall_witness(adj, &mate_l, &mate_r, free);
        return Err(Error::NoPerfectMatching {
            witness,
            neighbours,
        });
    }
    Permutation::new(mate_l)
}

/// A permutation `π` with `b[i, π(i)] != 0` for every row `i`.
///
/// When none exists the error carries a set of rows whose nonzero columns
/// are fewer than the rows themselves.
pub fn perfect_matching(b: &ZeroOneMatrix) -> Result<Permutation> {
    if !b.is_square() {
        return Err(Error::NotSquare {
            rows: b.rows(),
            cols: b.cols(),
        });
    }
    perfect_matching_on(&adjacency_lists(b), b.rows())
}

/// Ordered list of `d` pairwise arc-disjoint permutations on `n` elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DicycleFactorization {
    n: usize,
    factors: Vec<Permutation>,
}

impl DicycleFactorization {
    /// Checks equal sizes and pairwise arc-disjointness.
    pub fn new(factors: Vec<Permutation>) -> Result<Self> {
        let n = factors.first().map_or(0, Permutation::len);
        if factors.iter().any(|p| p.len() != n) {
            return Err(Error::InconsistentFactorization("factor sizes differ"));
        }
        for i in 0..n {
            let mut images: Vec<usize> = factors.iter().map(|p| p.apply(i)).collect();
            images.sort_unstable();
            if images.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InconsistentFactorization("two factors share an arc"));
            }
        }
        Ok(Self { n, factors })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn factor(&self, j: usize) -> &Permutation {
        &self.factors[j]
    }

    pub fn factor_digraph(&self, j: usize) -> Digraph {
        Digraph::from_permutation(&self.factors[j])
    }

    pub fn matrices(&self) -> Vec<ZeroOneMatrix> {
        self.factors.iter().map(Permutation::to_matrix).collect()
    }

    /// `M(H_0) ⊕ ... ⊕ M(H_{d-1})`.
    pub fn block_diagonal(&self) -> ZeroOneMatrix {
        direct_sum(&self.matrices())
    }

    /// Index of the factor containing arc `(tail, head)`, if any.
    pub fn factor_of(&self, tail: usize, head: usize) -> Option<usize> {
        self.factors.iter().position(|p| p.apply(tail) == head)
    }

    /// Union of the factors.
    pub fn to_digraph(&self) -> Digraph {
        let arcs = self
            .factors
            .iter()
            .flat_map(|p| p.as_slice().iter().copied().enumerate());
        Digraph::new(self.n, arcs).expect("factor images are in range")
    }

    /// Checks that the factors partition the arc set of `d`.
    pub fn check_against(&self, d: &Digraph) -> Result<()> {
        if self.n != d.vertex_count() {
            return Err(Error::InconsistentFactorization("vertex counts differ"));
        }
        if self.n * self.degree() != d.arc_count() {
            return Err(Error::InconsistentFactorization("arc counts differ"));
        }
        let covered = self
            .factors
            .iter()
            .all(|p| (0..self.n).all(|i| d.has_arc(i, p.apply(i))));
        if !covered {
            return Err(Error::InconsistentFactorization(
                "factor arc missing from digraph",
            ));
        }
        Ok(())
    }

    /// The same factors in the order `order[0], order[1], ...`.
    pub fn reordered(&self, order: &Permutation) -> Self {
        assert_eq!(order.len(), self.degree());
        Self {
            n: self.n,
            factors: order
                .as_slice()
                .iter()
                .map(|&j| self.factors[j].clone())
                .collect(),
        }
    }
}

/// Splits a regular digraph of degree `d >= 1` into `d` dicycle factors,
/// extracted one perfect matching at a time.
pub fn dicycle_factorization(d: &Digraph) -> Result<DicycleFactorization> {
    let degree = d.require_regular()?;
    if degree == 0 {
        return Err(Error::ZeroDegree);
    }
    let n = d.vertex_count();
    let mut adj: Vec<Vec<usize>> = (0..n).map(|u| d.out_neighbors(u).collect()).collect();
    let mut factors = Vec::with_capacity(degree);
    for _ in 0..degree {
        let p = perfect_matching_on(&adj, n)?;
        for (u, list) in adj.iter_mut().enumerate() {
            let v = p.apply(u);
            list.retain(|&w| w != v);
        }
        factors.push(p);
    }
    Ok(DicycleFactorization { n, factors })
}

/// Cycles of `p`, each starting at its smallest element, sorted by that
/// element.
pub fn orbits(p: &Permutation) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut cycles = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            cycle.push(v);
            v = p.apply(v);
        }
        cycles.push(cycle);
    }
    cycles
}

/// `d` pairwise arc-disjoint permutations drawn by seeded Fisher–Yates
/// shuffles. After each shuffle, every position that reuses an earlier
/// factor's arc is repaired by random transpositions; a shuffle that cannot
/// be repaired is discarded and counts against [`MAX_RETRIES_PER_FACTOR`].
///
/// The seed-to-output map is stable for a given build but is not a
/// portable format.
pub fn random_factorization(n: usize, d: usize, seed: u64) -> Result<DicycleFactorization> {
    if d == 0 {
        return Err(Error::InvalidParameter("degree must be at least 1"));
    }
    if d > n {
        return Err(Error::DegreeExceedsOrder { n, d });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut used = vec![false; n * n];
    let mut factors = Vec::with_capacity(d);
    let mut map: Vec<usize> = (0..n).collect();
    for factor in 0..d {
        let mut attempts = 0;
        loop {
            map.shuffle(&mut rng);
            if repair_collisions(&mut map, &used, n, &mut rng) {
                break;
            }
            attempts += 1;
            if attempts > MAX_RETRIES_PER_FACTOR {
                return Err(Error::RetryBudgetExhausted { factor });
            }
        }
        for (i, &j) in map.iter().enumerate() {
            used[i * n + j] = true;
        }
        factors.push(Permutation::new(map.clone())?);
    }
    Ok(DicycleFactorization { n, factors })
}

// Swaps images until no position i maps onto an arc already in `used`;
// gives up on a position after n random partners.
fn repair_collisions(map: &mut [usize], used: &[bool], n: usize, rng: &mut ChaCha8Rng) -> bool {
    use rand::Rng;
    let free = |i: usize, j: usize| !used[i * n + j];
    for i in 0..n {
        if free(i, map[i]) {
            continue;
        }
        let mut fixed = false;
        for _ in 0..n {
            let k = rng.gen_range(0..n);
            if free(i, map[k]) && free(k, map[i]) {
                map.swap(i, k);
                fixed = true;
                break;
            }
        }
        if !fixed {
            return false;
        }
    }
    true
}

/// A `d`-regular digraph on `n` vertices: the union of
/// [`random_factorization`]'s permutations.
pub fn random_regular_digraph(n: usize, d: usize, seed: u64) -> Result<Digraph> {
    Ok(random_factorization(n, d, seed)?.to_digraph())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::is_permutation_matrix;

    fn k_plus(d: usize) -> Digraph {
        Digraph::from_adjacency(&ZeroOneMatrix::ones(d)).unwrap()
    }

    #[test]
    fn perfect_matching_identity() {
        let p = perfect_matching(&ZeroOneMatrix::identity(3)).unwrap();
        assert!(p.is_identity());
    }

    #[test]
    fn perfect_matching_on_j2_satisfies_contract() {
        let b = ZeroOneMatrix::ones(2);
        let p = perfect_matching(&b).unwrap();
        // Exhaustively: both permutations of two elements are supported by J_2.
        let candidates = [
            Permutation::new([0, 1]).unwrap(),
            Permutation::new([1, 0]).unwrap(),
        ];
        assert!(candidates.contains(&p));
        assert!((0..2).all(|i| b.get(i, p.apply(i)) == 1));
    }

    #[test]
    fn perfect_matching_zero_row_has_witness() {
        let b = ZeroOneMatrix::from_rows(&[[1, 1, 0], [0, 0, 0], [0, 1, 1]]).unwrap();
        match perfect_matching(&b) {
            Err(Error::NoPerfectMatching {
                witness,
                neighbours,
            }) => {
                assert!(witness.contains(&1));
                assert!(neighbours < witness.len());
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn hall_witness_is_violating_set() {
        // rows 0,1,2 only reach columns 0,1
        let b = ZeroOneMatrix::from_rows(&[[1, 1, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1]])
            .unwrap();
        let Err(Error::NoPerfectMatching {
            witness,
            neighbours,
        }) = perfect_matching(&b)
        else {
            panic!("matching should not exist");
        };
        let mut cols = [false; 4];
        for &r in &witness {
            for (j, &v) in b.row(r).iter().enumerate() {
                if v != 0 {
                    cols[j] = true;
                }
            }
        }
        assert_eq!(cols.iter().filter(|&&c| c).count(), neighbours);
        assert!(neighbours < witness.len());
    }

    #[test]
    fn perfect_matching_not_square() {
        assert!(matches!(
            perfect_matching(&ZeroOneMatrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn maximum_matching_size_on_deficient_matrix() {
        let b = ZeroOneMatrix::from_rows(&[[1, 1, 0], [1, 1, 0], [1, 1, 0]]).unwrap();
        let m = maximum_matching(&b);
        assert_eq!(m.size(), 2);
        assert!(!m.is_perfect());
        assert!(m.pairs().all(|(i, j)| b.get(i, j) == 1));
    }

    #[test]
    fn factorization_of_dicycle_is_itself() {
        let f = dicycle_factorization(&Digraph::dicycle(3)).unwrap();
        assert_eq!(f.degree(), 1);
        assert_eq!(f.factor(0), &Permutation::new([1, 2, 0]).unwrap());
    }

    #[test]
    fn factorization_of_k2_plus() {
        let f = dicycle_factorization(&k_plus(2)).unwrap();
        let id = Permutation::identity(2);
        let swap = Permutation::new([1, 0]).unwrap();
        // The only two factorizations of J_2 are the two orders of {id, swap}.
        assert!(f.factors() == [id.clone(), swap.clone()] || f.factors() == [swap, id]);
        let sum = f.matrices()[0].add(&f.matrices()[1]).unwrap();
        assert_eq!(sum, ZeroOneMatrix::ones(2));
        assert!(f
            .factors()
            .iter()
            .all(|p| is_permutation_matrix(&p.to_matrix())));
    }

    #[test]
    fn factorization_rejects_non_regular() {
        let path = Digraph::new(2, [(0, 1)]).unwrap();
        assert!(matches!(
            dicycle_factorization(&path),
            Err(Error::NotRegular { vertex: 0, .. })
        ));
        assert_eq!(
            dicycle_factorization(&Digraph::empty(3)),
            Err(Error::ZeroDegree)
        );
    }

    #[test]
    fn factorization_with_mixed_cycle_structure() {
        // 2-regular, not a union of two obvious cycles
        let d = Digraph::new(
            4,
            [
                (0, 1),
                (0, 2),
                (1, 2),
                (1, 3),
                (2, 3),
                (2, 0),
                (3, 0),
                (3, 1),
            ],
        )
        .unwrap();
        let f = dicycle_factorization(&d).unwrap();
        f.check_against(&d).unwrap();
        assert_eq!(f.to_digraph(), d);
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(
            orbits(&Permutation::identity(3)),
            [vec![0], vec![1], vec![2]]
        );
        assert_eq!(
            orbits(&Permutation::new([1, 2, 0]).unwrap()),
            [vec![0, 1, 2]]
        );
        assert_eq!(
            orbits(&Permutation::new([1, 0, 3, 2]).unwrap()),
            [vec![0, 1], vec![2, 3]]
        );
        assert_eq!(
            orbits(&Permutation::new([2, 3, 1, 0]).unwrap()),
            [vec![0, 2, 1, 3]]
        );
    }

    #[test]
    fn random_regular_examples() {
        let d = random_regular_digraph(5, 1, 9).unwrap();
        assert_eq!(d.regularity(), Some(1));

        let d = random_regular_digraph(6, 3, 42).unwrap();
        assert_eq!(d.regularity(), Some(3));
        assert_eq!(d.arc_count(), 18);

        assert_eq!(
            random_regular_digraph(2, 3, 0),
            Err(Error::DegreeExceedsOrder { n: 2, d: 3 })
        );
        assert!(random_regular_digraph(3, 0, 0).is_err());
    }

    #[test]
    fn random_is_reproducible() {
        let a = random_regular_digraph(30, 4, 1234).unwrap();
        let b = random_regular_digraph(30, 4, 1234).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_regular_digraph(30, 4, 1235).unwrap());
    }

    #[test]
    fn random_complete_case() {
        // d = n forces K_n⁺
        let d = random_regular_digraph(4, 4, 3).unwrap();
        assert_eq!(d, k_plus(4));
    }

    #[test]
    fn factorization_constructor_checks() {
        let id = Permutation::identity(3);
        assert!(DicycleFactorization::new(vec![id.clone(), id.clone()]).is_err());
        assert!(DicycleFactorization::new(vec![id, Permutation::identity(2)]).is_err());
        let f = DicycleFactorization::new(vec![
            Permutation::new([1, 2, 0]).unwrap(),
            Permutation::new([2, 0, 1]).unwrap(),
        ])
        .unwrap();
        assert_eq!(f.factor_of(0, 2), Some(1));
        assert_eq!(f.factor_of(0, 0), None);
        assert!(f.check_against(&Digraph::dicycle(3)).is_err());
    }
}
