//! Dense exact matrices over small nonnegative integers.
//!
//! Entries are `u32` rather than `bool` so that a product whose entries
//! exceed 1 is visible instead of being saturated.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Permutation, Result};

/// Row-major dense matrix of small nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZeroOneMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl ZeroOneMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// `I_n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// `J_n`, the all-ones matrix.
    pub fn ones(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            data: vec![1; n * n],
        }
    }

    pub fn from_rows<R: AsRef<[u32]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (row, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::RaggedRows {
                    row,
                    len: r.len(),
                    expected: cols,
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> u32 {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.data[row * self.cols + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: u32) {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.data[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[u32] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        let cols = self.cols;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(move |(k, &v)| (k / cols, k % cols, v))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|&&v| v != 0).count()
    }

    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&v| u64::from(v)).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        let mut sums = vec![0u64; self.cols];
        for (_, j, v) in self.nonzeros() {
            sums[j] += u64::from(v);
        }
        sums
    }

    pub fn is_zero_one(&self) -> bool {
        self.data.iter().all(|&v| v <= 1)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// The same matrix with every nonzero entry replaced by 1.
    pub fn support(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| u32::from(v != 0)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, j, v) in self.nonzeros() {
            t.set(j, i, v);
        }
        t
    }

    /// Copy of the `rows x cols` block whose top-left corner is `(row, col)`.
    pub fn block(&self, row: usize, col: usize, rows: usize, cols: usize) -> Self {
        assert!(row + rows <= self.rows && col + cols <= self.cols);
        let mut b = Self::zeros(rows, cols);
        for i in 0..rows {
            let src = &self.data[(row + i) * self.cols + col..][..cols];
            b.data[i * cols..(i + 1) * cols].copy_from_slice(src);
        }
        b
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op: "add",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// First coordinate (row-major) where the two matrices differ, or
    /// `None` when they are identical. Matrices of different shapes never
    /// compare equal; see [`crate::report::Mismatch`].
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return None;
        }
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols, k % self.cols))
    }
}

impl fmt::Debug for ZeroOneMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ZeroOneMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Rows of space-separated entries, one line per row.
impl fmt::Display for ZeroOneMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// Kronecker product: block `(i, j)` of the result is `a[i, j] * b`.
pub fn kron(a: &ZeroOneMatrix, b: &ZeroOneMatrix) -> ZeroOneMatrix {
    let (br, bc) = b.shape();
    let mut out = ZeroOneMatrix::zeros(a.rows * br, a.cols * bc);
    for (i, j, av) in a.nonzeros() {
        for (k, l, bv) in b.nonzeros() {
            out.set(i * br + k, j * bc + l, av * bv);
        }
    }
    out
}

/// Block-diagonal matrix with the given blocks; the empty list gives `0x0`.
pub fn direct_sum(blocks: &[ZeroOneMatrix]) -> ZeroOneMatrix {
    let rows = blocks.iter().map(ZeroOneMatrix::rows).sum();
    let cols = blocks.iter().map(ZeroOneMatrix::cols).sum();
    let mut out = ZeroOneMatrix::zeros(rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for b in blocks {
        for (i, j, v) in b.nonzeros() {
            out.set(r0 + i, c0 + j, v);
        }
        r0 += b.rows;
        c0 += b.cols;
    }
    out
}

/// Exact integer product.
pub fn matmul(a: &ZeroOneMatrix, b: &ZeroOneMatrix) -> Result<ZeroOneMatrix> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch {
            op: "matmul",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let mut out = ZeroOneMatrix::zeros(a.rows, b.cols);
    for i in 0..a.rows {
        let dst = &mut out.data[i * b.cols..(i + 1) * b.cols];
        for (k, &av) in a.row(i).iter().enumerate() {
            if av == 0 {
                continue;
            }
            for (d, &bv) in dst.iter_mut().zip(b.row(k)) {
                *d += av * bv;
            }
        }
    }
    Ok(out)
}

/// Relabels the rows and columns of `m` by `p`: `result[p(i), p(j)] = m[i, j]`.
///
/// Writing `Q` for the matrix with `Q[p(i), i] = 1`, this is `Q · m · Qᵀ`.
/// Note that [`Permutation::to_matrix`] is the dicycle-factor matrix
/// `P[i, p(i)] = 1`, which is `Qᵀ`.
pub fn similarity(p: &Permutation, m: &ZeroOneMatrix) -> Result<ZeroOneMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if m.rows != p.len() {
        return Err(Error::DimensionMismatch {
            op: "similarity",
            left: (p.len(), p.len()),
            right: m.shape(),
        });
    }
    let mut out = ZeroOneMatrix::zeros(m.rows, m.cols);
    for (i, j, v) in m.nonzeros() {
        out.set(p.apply(i), p.apply(j), v);
    }
    Ok(out)
}

/// True iff `m` is square, 0/1, with exactly one 1 in every row and column.
pub fn is_permutation_matrix(m: &ZeroOneMatrix) -> bool {
    m.is_square()
        && m.is_zero_one()
        && m.row_sums().iter().all(|&s| s == 1)
        && m.col_sums().iter().all(|&s| s == 1)
}
