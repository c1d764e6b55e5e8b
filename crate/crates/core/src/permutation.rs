use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result, ZeroOneMatrix};

/// A bijection on `{0, ..., n-1}` in one-line image notation.
///
/// Read as a digraph, `i -> map[i]` is a dicycle factor; read as a matrix it
/// is `P[i, map[i]] = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn new(map: impl Into<Vec<usize>>) -> Result<Self> {
        let map = map.into();
        let n = map.len();
        let mut seen = vec![false; n];
        for &image in &map {
            if image >= n {
                return Err(Error::NotPermutation("image out of range"));
            }
            if core::mem::replace(&mut seen[image], true) {
                return Err(Error::NotPermutation("repeated image"));
            }
        }
        Ok(Self { map })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            map: (0..n).collect(),
        }
    }

    /// Reads a permutation matrix `P[i, p(i)] = 1` back.
    pub fn from_matrix(m: &ZeroOneMatrix) -> Result<Self> {
        if !crate::matrix::is_permutation_matrix(m) {
            return Err(Error::NotPermutation("matrix is not a permutation matrix"));
        }
        let map = (0..m.rows())
            .map(|i| m.row(i).iter().position(|&v| v == 1).unwrap())
            .collect();
        Ok(Self { map })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Self { map: inv }
    }

    /// `self` followed by `next`: `i -> next(self(i))`.
    pub fn then(&self, next: &Self) -> Self {
        assert_eq!(self.len(), next.len(), "permutation sizes differ");
        Self {
            map: self.map.iter().map(|&j| next.map[j]).collect(),
        }
    }

    pub fn to_matrix(&self) -> ZeroOneMatrix {
        let mut m = ZeroOneMatrix::zeros(self.len(), self.len());
        for (i, &j) in self.map.iter().enumerate() {
            m.set(i, j, 1);
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Permutation").field(&self.map).finish()
    }
}

/// One-line image notation, `i0 i1 ... i{n-1}`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, j) in self.map.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{j}")?;
        }
        Ok(())
    }
}
