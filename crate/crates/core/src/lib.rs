//! Exact Schubert calculus on infinite flag varieties.
//!
//! Polynomials live in `Z[c, c', x, y, y', z, ξ]` with the graded degree
//! `deg c_k = k`. Enriched Schubert polynomials are computed by
//! back-stabilization of finite double Schubert polynomials and checked
//! against an interpolation oracle and determinantal formulas.

pub mod affine;
pub mod cache;
pub mod cli;
pub mod coproduct;
pub mod error;
pub mod linalg;
pub mod permutations;
pub mod polyring;
pub mod quotient;
pub mod schubert;
pub mod suites;
pub mod symfunc;
pub mod typec;

pub use error::{Error, Result};
pub use permutations::{AffinePermutation, Partition, Permutation, Triple};
pub use polyring::{Family, Monomial, Poly, Series, VarId};

/// Version stamp embedded in cache keys.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
