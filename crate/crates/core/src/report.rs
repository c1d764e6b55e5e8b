//! Outcome of an exact matrix-equality claim.

use alloc::string::String;
use core::fmt;

use crate::ZeroOneMatrix;

/// Where two compared matrices first disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mismatch {
    Shape {
        left: (usize, usize),
        right: (usize, usize),
    },
    Entry {
        row: usize,
        col: usize,
    },
}

/// Matrices larger than this are summarised by shape in the text block.
const DENSE_PRINT_LIMIT: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    claim: String,
    lhs: ZeroOneMatrix,
    rhs: ZeroOneMatrix,
    mismatch: Option<Mismatch>,
}

impl VerificationReport {
    pub fn compare(claim: impl Into<String>, lhs: ZeroOneMatrix, rhs: ZeroOneMatrix) -> Self {
        let mismatch = if lhs.shape() != rhs.shape() {
            Some(Mismatch::Shape {
                left: lhs.shape(),
                right: rhs.shape(),
            })
        } else {
            lhs.first_difference(&rhs)
                .map(|(row, col)| Mismatch::Entry { row, col })
        };
        Self {
            claim: claim.into(),
            lhs,
            rhs,
            mismatch,
        }
    }

    pub fn claim(&self) -> &str {
        &self.claim
    }

    pub fn lhs(&self) -> &ZeroOneMatrix {
        &self.lhs
    }

    pub fn rhs(&self) -> &ZeroOneMatrix {
        &self.rhs
    }

    pub fn mismatch(&self) -> Option<Mismatch> {
        self.mismatch
    }

    pub fn is_equal(&self) -> bool {
        self.mismatch.is_none()
    }

    /// `CLAIM <name> RESULT <equal|mismatch> [AT row col]`
    pub fn summary_line(&self) -> SummaryLine<'_> {
        SummaryLine(self)
    }
}

pub struct SummaryLine<'a>(&'a VerificationReport);

impl fmt::Display for SummaryLine<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.0;
        write!(f, "CLAIM {} RESULT ", r.claim)?;
        match r.mismatch {
            None => f.write_str("equal"),
            Some(Mismatch::Entry { row, col }) => write!(f, "mismatch AT {row} {col}"),
            Some(Mismatch::Shape { .. }) => f.write_str("mismatch"),
        }
    }
}

fn write_matrix(f: &mut fmt::Formatter<'_>, side: &str, m: &ZeroOneMatrix) -> fmt::Result {
    writeln!(f, "{side} ({}x{}):", m.rows(), m.cols())?;
    if m.rows() <= DENSE_PRINT_LIMIT && m.cols() <= DENSE_PRINT_LIMIT {
        write!(f, "{m}")
    } else {
        writeln!(f, "  [{} nonzero entries]", m.nnz())
    }
}

/// Human-readable block: both sides (dense when small) and the outcome.
impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "claim: {}", self.claim)?;
        write_matrix(f, "left", &self.lhs)?;
        write_matrix(f, "right", &self.rhs)?;
        match self.mismatch {
            None => writeln!(f, "result: equal"),
            Some(Mismatch::Entry { row, col }) => writeln!(
                f,
                "result: mismatch at ({row}, {col}): left {} right {}",
                self.lhs.get(row, col),
                self.rhs.get(row, col)
            ),
            Some(Mismatch::Shape { left, right }) => writeln!(
                f,
                "result: mismatch, shapes {}x{} and {}x{}",
                left.0, left.1, right.0, right.1
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn summary_lines() {
        let a = ZeroOneMatrix::identity(2);
        let eq = VerificationReport::compare("x", a.clone(), a.clone());
        assert!(eq.is_equal());
        assert_eq!(eq.summary_line().to_string(), "CLAIM x RESULT equal");

        let b = ZeroOneMatrix::ones(2);
        let ne = VerificationReport::compare("y", a.clone(), b);
        assert_eq!(ne.mismatch(), Some(Mismatch::Entry { row: 0, col: 1 }));
        assert_eq!(
            ne.summary_line().to_string(),
            "CLAIM y RESULT mismatch AT 0 1"
        );

        let shape = VerificationReport::compare("z", a, ZeroOneMatrix::identity(3));
        assert!(!shape.is_equal());
        assert_eq!(shape.summary_line().to_string(), "CLAIM z RESULT mismatch");
    }

    #[test]
    fn text_block() {
        let a = ZeroOneMatrix::identity(2);
        let text = VerificationReport::compare("t", a.clone(), a).to_string();
        assert_eq!(
            text,
            "claim: t\nleft (2x2):\n1 0\n0 1\nright (2x2):\n1 0\n0 1\nresult: equal\n"
        );
    }
}
