//! Exact polynomial sequences, Turán-type expressions and weak Hurwitz
//! stability decisions.
//!
//! Everything here works over exact rationals and needs only `alloc`. The
//! only floating-point code is the numeric cross-check in
//! [`stability::cross_check_oracle`], which never feeds a production verdict.
//!
//! Module map:
//! - [`polycore`]: dense univariate polynomials over ℚ, gcd and squarefree parts.
//! - [`sequences`]: named polynomial families and the three recurrence operators.
//! - [`turan`]: Turán, extended Turán, extended Laguerre and Wronskian expressions.
//! - [`stability`]: the Sturm–Hurwitz decision procedure, real-root counting,
//!   isolation, interlacing and half-plane checks.
#![no_std]
#![deny(rust_2018_idioms, unused_must_use)]
#![warn(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod polycore;
pub mod sequences;
pub mod stability;
pub mod turan;

pub use error::Error;
pub use polycore::{ExactPoly, Rational};
pub use sequences::SequenceSpec;
pub use stability::{StabilityCertificate, SplitPoly};

/// Crate-wide result alias.
pub type Result<T, E = Error> = core::result::Result<T, E>;
