//! Exact computation of rank-r D0-D6 invariants DT(r, n) and Eu(r, n).
//!
//! Two independent routes are provided: the combinatorial wall-crossing sum
//! over bi-colored weighted ordered vertices ([`invariants::wallcross`]) and
//! the closed generating series in terms of the MacMahon function
//! ([`invariants::dt1_series`], [`invariants::closed_dt2_series`]). All values
//! are polynomials in the Euler characteristic χ with exact rational
//! coefficients.
//!
//! The arithmetic core ([`Poly`], [`PowerSeries`]) is generic over a
//! [`Scalar`] field; the aliases below fix the exact instance.

pub mod cli;
pub mod comb;
pub mod error;
pub mod invariants;
pub mod oracles;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use invariants::InvariantKind;
pub use poly::Poly;
pub use scalar::{Coeff, Scalar};
pub use series::{DeltaPredicate, PowerSeries};

/// Exact rational scalars.
pub type Rational = num_rational::BigRational;
/// A polynomial in χ with exact rational coefficients.
pub type ChiPoly = Poly<Rational>;
/// A truncated q-series with χ-polynomial coefficients.
pub type Series = PowerSeries<ChiPoly>;
/// Floating-point counterparts, for quick numeric runs only.
pub type ChiPolyF64 = Poly<f64>;
pub type SeriesF64 = PowerSeries<Poly<f64>>;
