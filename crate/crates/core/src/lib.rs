//! Exact-arithmetic cohomology of finite-dimensional Lie algebras over ℚ.
//!
//! The crate builds Lie algebras from rational structure constants, equips
//! them with invariant bilinear forms, and computes their Chevalley-Eilenberg
//! cohomology (Betti numbers) two ways: from the textbook differential and,
//! for quadratic algebras, from the super Poisson bracket differential
//! ∂ = −{I,·} attached to the associated 3-form I(X,Y,Z) = B([X,Y],Z).
//! Closed-form and recursive Betti counts for several concrete families are
//! implemented alongside brute-force oracles that certify them.
//!
//! All arithmetic is exact: scalars are arbitrary-precision rationals and
//! every rank is obtained by fraction-free elimination.

pub mod algebra;
pub mod cohomology;
pub mod error;
pub mod exterior;
pub mod families;
pub mod formulas;
pub mod linalg;
pub mod scalar;

pub use error::Error;
pub use scalar::Scalar;

/// Convenient result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
