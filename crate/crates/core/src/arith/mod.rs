//! Exact arithmetic: big rationals, polynomials in one variable `t`, and the
//! rational-function field Q(t) that holds deformation parameters.

mod parse;
mod poly;
mod scalar;

pub use poly::UniPoly;
pub use scalar::ParamScalar;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Displays as `p/q` (or `p` when `q = 1`).
pub type Rational = num_rational::BigRational;
