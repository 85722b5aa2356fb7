//! Analytic invariants of plane branch singularities.
//!
//! From a parameterization `(T^v0, x2(T))` or a semiquasihomogeneous equation
//! this crate computes the value semigroup, the value set of Kähler
//! differentials, the Tjurina number, the spectral numbers (two-generator
//! case) and certified roots of the reduced Bernstein polynomial.
//!
//! The arithmetic substrate in [`exact`] is generic over an exact [`Field`];
//! everything above it is fixed to arbitrary-precision rationals through the
//! aliases below.

pub mod bernstein;
pub mod branch;
pub mod cli;
pub mod differentials;
pub mod exact;
pub mod scalar;
pub mod semigroup;
pub mod spectrum;

mod error;

pub use error::{Error, Result};
pub use branch::{BranchEquation, Parameterization};
pub use differentials::{lambda_set, LambdaSet};
pub use exact::{BiPoly, Order, TruncSeries};
pub use scalar::{Field, FractionField};
pub use semigroup::NumSemigroup;
pub use spectrum::Spectrum;

/// Arbitrary-precision rational.
pub type Rat = num_rational::BigRational;
/// Truncated series with rational coefficients.
pub type Series = TruncSeries<Rat>;
/// Bivariate polynomial with rational coefficients.
pub type Poly = BiPoly<Rat>;
