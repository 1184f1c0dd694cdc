//! Exact machinery for the free orthogonal quantum group `A_o(n)`.
//!
//! The crate is layered bottom-up:
//!
//! - [`algebra`]: words, polynomials with rational coefficients in the free
//!   algebra on the generators `u_ij`, and the Hopf structure maps.
//! - [`rewriting`]: the defining relations, reduction with cofactor
//!   certificates, and degree-truncated noncommutative Gröbner completion.
//! - [`linalg`]: fraction-free exact linear algebra over the rationals.
//! - [`resolution`]: the length-three free resolution of the counit, its
//!   exactness and self-duality checks, and the trivial-coefficient homology.
//! - [`frontend`]: presentation parsing, run configuration and JSON reports.

pub mod algebra;
pub mod error;
pub mod frontend;
pub mod linalg;
pub mod resolution;
pub mod rewriting;

pub use error::{Error, Result};
