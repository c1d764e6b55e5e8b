//! Line digraphs of regular digraphs and the block structure of their
//! adjacency matrices.
//!
//! For a `d`-regular digraph `D` on `n` vertices with a dicycle
//! factorization `H_0, ..., H_{d-1}`, the arcs of `D` can be labelled so
//! that the adjacency matrix of the line digraph equals
//! `(J_d ⊗ I_n) · (M(H_0) ⊕ ... ⊕ M(H_{d-1}))`. This crate builds every
//! object in that identity explicitly and checks it by exact integer
//! matrix comparison:
//!
//! * [`matrix`]: dense small-integer matrices, Kronecker products, direct
//!   sums, products and permutation similarity.
//! * [`digraph`]: simple digraphs (loops allowed) with a canonical arc order.
//! * [`factorization`]: dicycle factorizations by repeated bipartite perfect
//!   matching, permutation orbits, and a seeded regular digraph generator.
//! * [`line`]: line digraphs, the canonical arc labelling, growth digraphs,
//!   spiked dicycles and the verifiers built on them.
//! * [`topologies`]: `K_d⁺`, de Bruijn digraphs and their correspondence with
//!   iterated line digraphs.
//!
//! Indices are 0-based throughout. The crate is `no_std` and only needs
//! `alloc`.
//!
//! ```
//! use linedigraph_core::{line, topologies};
//!
//! let k2 = topologies::complete_digraph_with_loops(2).unwrap();
//! let report = line::verify_theorem(&k2).unwrap();
//! assert!(report.is_equal());
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod digraph;
mod error;
pub mod factorization;
pub mod line;
pub mod matrix;
pub mod permutation;
pub mod report;
pub mod topologies;

pub use digraph::{ArcId, Digraph};
pub use error::{Error, Result};
pub use factorization::DicycleFactorization;
pub use matrix::ZeroOneMatrix;
pub use permutation::Permutation;
pub use report::{Mismatch, VerificationReport};
