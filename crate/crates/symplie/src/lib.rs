//! Exact-arithmetic toolkit for finite-dimensional symplectic Lie algebras.
//!
//! Everything here is computed over arbitrary-precision rationals: there are
//! no tolerances anywhere, and every structural identity (Jacobi, cocycle
//! closedness, left-symmetry, Lagrangian transversality, ...) is an exact
//! equality test.
//!
//! The crate is organized around six layers:
//!
//! - [`exactlin`]: rational scalars, dense matrices, canonical subspaces
//!   (reduced row-echelon bases), solving, kernels, determinants.
//! - [`liealg`]: Lie algebras presented by structure constants, with
//!   validation and the standard invariants (center, derived ideal, lower
//!   central series, unimodularity).
//! - [`symplectic`]: symplectic structures, the induced left-symmetric
//!   product, orthogonals and subspace classification, symplectic reduction,
//!   coboundaries and Frobenius solving, and the momentum-cocycle series.
//! - [`nilreduce`]: central reduction of nilpotent symplectic algebras,
//!   full reduction chains, and double-extension verification.
//! - [`affn`]: the affine Lie algebra aff(R^n) as a Frobenius algebra:
//!   coadjoint action, open orbits and their orientation invariant, reduced
//!   pairs, and the transversal Lagrangian pair L, L'.
//! - [`io`] / [`catalog`] / [`report`]: the JSON algebra file format, the
//!   built-in example catalog, and deterministic structured reports.
//!
//! Coordinate conventions: bases are 0-indexed everywhere; a Lie algebra of
//! dimension `n` has basis `e0..e(n-1)`; coordinate vectors and covectors are
//! plain `Vec<Rational>` of length `n`.
//!
//! Contract-level dimension mismatches (a coordinate vector of the wrong
//! length, a non-conforming matrix product) are programming errors and
//! panic; data-dependent failures (a bracket table violating Jacobi, a
//! degenerate form, a non-central element) are reported as typed errors
//! carrying a witness.

pub mod affn;
pub mod catalog;
pub mod exactlin;
pub mod io;
pub mod liealg;
pub mod nilreduce;
pub mod report;
pub mod symplectic;

pub use exactlin::{Matrix, Rational, Subspace};
pub use liealg::LieAlgebra;

