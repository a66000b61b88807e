//! Dense univariate polynomials with exact rational coefficients.
//!
//! [`ExactPoly`] stores coefficients in ascending degree order with no
//! trailing zeros; the zero polynomial is the empty list. The gcd machinery
//! runs over ℤ on primitive parts (see [`IntPoly`]) and only converts back to
//! ℚ for the final monic normalization.

mod gcd;
mod intpoly;
mod poly;
mod rational;
mod text;

pub use gcd::{gcd, squarefree_part};
pub use intpoly::IntPoly;
pub use poly::ExactPoly;
pub use rational::{binomial, factorial, int, parse_rational, pow2, rat, Rational};
