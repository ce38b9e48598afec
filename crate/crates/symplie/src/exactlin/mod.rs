//! Exact rational linear algebra: the kernel every other module sits on.
//!
//! All scalars are arbitrary-precision rationals ([`Rational`]), all results
//! are exact, and subspaces are kept in a canonical form (reduced row-echelon
//! basis with strictly increasing pivots) so that equality of subspaces is
//! equality of stored data.

mod matrix;
mod rational;
mod subspace;

pub use matrix::{LinError, Matrix};
pub use rational::{format_rational, parse_rational, rat, rat_int, RationalParseError};
pub use subspace::Subspace;

/// Exact arbitrary-precision rational scalar.
///
/// Always stored reduced with a positive denominator; serialized as `"p/q"`
/// or `"p"` (see [`parse_rational`] / [`format_rational`]).
pub type Rational = num_rational::BigRational;
