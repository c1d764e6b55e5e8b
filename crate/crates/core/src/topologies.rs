//! `K_d⁺`, de Bruijn digraphs, and explicit isomorphisms relating them to
//! iterated line digraphs.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::factorization::dicycle_factorization;
use crate::line::{canonical_labeling, iterated_line_digraph, structured_product};
use crate::matrix::similarity;
use crate::{
    DicycleFactorization, Digraph, Error, Permutation, Result, VerificationReport, ZeroOneMatrix,
};

/// A word over the alphabet `0..alphabet`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: usize,
    letters: Vec<usize>,
}

impl Word {
    pub fn new(alphabet: usize, letters: Vec<usize>) -> Result<Self> {
        if letters.iter().any(|&a| a >= alphabet) {
            return Err(Error::InvalidParameter("letter outside the alphabet"));
        }
        Ok(Self { alphabet, letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Position in the lexicographic order of all words of this length.
    pub fn index(&self) -> usize {
        self.letters
            .iter()
            .fold(0, |acc, &a| acc * self.alphabet + a)
    }
}

/// Digit string when the alphabet fits in one decimal digit, otherwise
/// dash-separated letters.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.alphabet <= 10 { "" } else { "-" };
        for (i, a) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// `K_d⁺`: every ordered pair of `d` vertices, loops included.
pub fn complete_digraph_with_loops(d: usize) -> Result<Digraph> {
    if d == 0 {
        return Err(Error::InvalidParameter("K_d+ needs d >= 1"));
    }
    Digraph::from_adjacency(&ZeroOneMatrix::ones(d))
}

/// `B(d, k)` with vertex `x` labelled by the `x`-th word of length `k` in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeBruijn {
    digraph: Digraph,
    alphabet: usize,
    length: usize,
}

impl DeBruijn {
    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn word_length(&self) -> usize {
        self.length
    }

    pub fn word(&self, x: usize) -> Word {
        let mut letters = alloc::vec![0; self.length];
        let mut rest = x;
        for slot in letters.iter_mut().rev() {
            *slot = rest % self.alphabet;
            rest /= self.alphabet;
        }
        Word {
            alphabet: self.alphabet,
            letters,
        }
    }
}

fn word_count(d: usize, k: usize) -> Result<usize> {
    u32::try_from(k)
        .ok()
        .and_then(|k| d.checked_pow(k))
        .ok_or(Error::InvalidParameter("d^k overflows"))
}

/// Arc `w -> w'` iff the last `k-1` letters of `w` are the first `k-1` of
/// `w'`.
pub fn de_bruijn(d: usize, k: usize) -> Result<DeBruijn> {
    if d == 0 || k == 0 {
        return Err(Error::InvalidParameter("de Bruijn digraph needs d, k >= 1"));
    }
    let count = word_count(d, k)?;
    let suffixes = count / d;
    let mut arcs = Vec::with_capacity(count * d);
    for x in 0..count {
        // drop the first letter, append each letter
        let shifted = (x % suffixes) * d;
        arcs.extend((0..d).map(|a| (x, shifted + a)));
    }
    Ok(DeBruijn {
        digraph: Digraph::new(count, arcs)?,
        alphabet: d,
        length: k,
    })
}

/// Factors `i -> (i + l) mod d` for `l = 0..d`.
pub fn circulant_factorization(d: usize) -> Result<DicycleFactorization> {
    if d == 0 {
        return Err(Error::InvalidParameter(
            "circulant factorization needs d >= 1",
        ));
    }
    let factors = (0..d)
        .map(|l| Permutation::new((0..d).map(|i| (i + l) % d).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    DicycleFactorization::new(factors)
}

/// Decodes each vertex of `L^{k-1}(K_d⁺)` to the walk `v_1 ... v_k` it
/// represents and sends it to the word `v_1 ... v_k` of `B(d, k)`; checks
/// the relabelled adjacency matrix against `M(B(d, k))` entrywise.
pub fn fya_relabeling(d: usize, k: usize) -> Result<(Permutation, VerificationReport)> {
    let bruijn = de_bruijn(d, k)?;
    let iterated = iterated_line_digraph(&complete_digraph_with_loops(d)?, k - 1)?;
    let map = (0..iterated.digraph().vertex_count())
        .map(|x| {
            Word {
                alphabet: d,
                letters: iterated.walk(x).to_vec(),
            }
            .index()
        })
        .collect::<Vec<_>>();
    let p = Permutation::new(map)?;
    let report = VerificationReport::compare(
        format!("fya[d={d},k={k}]"),
        similarity(&p, &iterated.digraph().adjacency_matrix())?,
        bruijn.digraph().adjacency_matrix(),
    );
    Ok((p, report))
}

/// `M(B(d, 2))` relabelled onto `(J_d ⊗ I_d) · ⊕ M(H_i)` for a given
/// factorization of `K_d⁺`, through the explicit composite of the de Bruijn
/// word map and the canonical arc labelling.
pub fn verify_debruijn_remark_with(
    d: usize,
    f: &DicycleFactorization,
    claim: &str,
) -> Result<VerificationReport> {
    let kd = complete_digraph_with_loops(d)?;
    let (words, _) = fya_relabeling(d, 2)?;
    let labeling = canonical_labeling(&kd, f)?;
    // word -> arc of K_d⁺ -> canonical label
    let q = words.inverse().then(labeling.permutation());
    Ok(VerificationReport::compare(
        claim,
        similarity(&q, &de_bruijn(d, 2)?.digraph().adjacency_matrix())?,
        structured_product(f),
    ))
}

/// Runs the check with the circulant factorization and with the
/// matching-based one, in that order.
pub fn verify_debruijn_remark(d: usize) -> Result<Vec<VerificationReport>> {
    let circulant = circulant_factorization(d)?;
    let matched = dicycle_factorization(&complete_digraph_with_loops(d)?)?;
    Ok(alloc::vec![
        verify_debruijn_remark_with(d, &circulant, &format!("remark[d={d},circulant]"))?,
        verify_debruijn_remark_with(d, &matched, &format!("remark[d={d},matching]"))?,
    ])
}
