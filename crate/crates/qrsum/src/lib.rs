//! Exact counting of k-element subset sums over the quadratic residues of a
//! finite field F_{p^s} with odd characteristic.
//!
//! Let H be the multiplicative subgroup of nonzero squares of F_q, q = p^s.
//! This crate evaluates, in exact arithmetic, the number of k-element subsets
//! of H that sum to a target b — together with the two auxiliary families the
//! closed formulas are built from: counts of solutions of quadratic diagonal
//! equations with nonzero coordinates, and counts of tuples of distinct
//! nonzero elements whose squares sum to b.
//!
//! Everything is evaluated in the quadratic rings Q(√q) or Q(i√q) with exact
//! rational coefficients and certified to be a plain nonnegative integer at
//! the end; floating point appears only in the Gauss-sum test oracle. Every
//! closed form is paired with an independent brute-force oracle
//! ([`oracle`]) so small fields can be verified exhaustively.
//!
//! Entry points:
//! - [`field::FieldSpec`] — construct F_{p^s}, enumerate elements and residues.
//! - [`counting::subset_count`] — the headline count N_H(k, b).
//! - [`counting::distinct_count`], [`counting::diagonal_count`] — the two
//!   intermediate families.
//! - [`charsums`] — Gauss and Jacobi-type sums, closed form and direct.
//! - [`oracle`] — exhaustive enumeration ground truth.
//! - [`cli`] — the `qrsum` command-line surface.

pub mod charsums;
pub mod cli;
pub mod counting;
pub mod error;
pub mod exact;
pub mod field;
pub mod oracle;

pub use counting::CountResult;
pub use error::{Error, Result};
pub use exact::{QuadExact, RingTag};
pub use field::{FieldElement, FieldSpec};
