//! Exact linear algebra over the rationals.
//!
//! Elimination is fraction-free: rows are scaled to primitive integer vectors
//! and combined as `p*row - q*pivot`, so no intermediate fractions appear.
//! Pivots are taken at the first nonzero column of each incoming row, in
//! input order, which makes every reduced form deterministic.

mod elimination;
mod matrix;

pub use elimination::{kernel_basis, rank, solve_in_span, SpanSolver};
pub use matrix::{RationalMatrix, SparseVector};
