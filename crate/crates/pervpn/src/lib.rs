//! Perverse sheaves on complex projective space, realized exactly.
//!
//! The perverse-sheaf category of `P^n` (stratified by a flag of projective
//! subspaces) is equivalent to finite-dimensional modules over a quadratic
//! quiver algebra `A_n` on `n + 1` vertices. This crate builds that algebra
//! and its module category over an exact field, computes the homological
//! structure (minimal projective resolutions, graded Hom spaces, Yoneda
//! products, Serre functor, P-twists), and machine-checks the expected
//! dimension tables and functor identities at small `n`.
//!
//! Organization:
//! * [`field`], [`linalg`] — exact scalars and dense linear algebra;
//! * [`quiver`], [`algebra`] — quivers and quotient path algebras;
//! * [`module`] — quiver representations, named objects, duality;
//! * [`complex`] — perfect complexes, cones, minimization, chain maps;
//! * [`homalg`] — resolutions, Ext, Yoneda composition, graded profiles;
//! * [`functors`] — Nakayama/Serre functor and the P-twist;
//! * [`heart`] — a per-`n` context holding the algebra, named objects and
//!   caches;
//! * [`verify`] — the batch verification suites and their reports;
//! * [`json`] — serialization of algebras, modules, complexes and reports.
//!
//! The default scalar type is [`field::Q`] (arbitrary-precision rationals);
//! every public structure is generic over [`field::Field`].

pub mod algebra;
pub mod complex;
pub mod field;
pub mod functors;
pub mod heart;
pub mod homalg;
pub mod json;
pub mod linalg;
pub mod module;
pub mod quiver;
pub mod verify;

pub use field::{Field, Fp, Q};
pub use linalg::Mat;

/// Convenience alias: a matrix over the default rational scalars.
pub type QMat = Mat<Q>;
