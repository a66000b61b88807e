//! Floating-point cross-check: Aberth–Ehrlich simultaneous root iteration.
//!
//! Used only by tests and randomized campaigns to confirm exact verdicts.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{Float, ToPrimitive, Zero};

use crate::polycore::ExactPoly;

/// Roots closer than this to the imaginary axis make the oracle abstain.
pub const AXIS_MARGIN: f64 = 1e-6;

const MAX_ITERS: usize = 2000;

/// Verdict of the numeric oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    Stable,
    Unstable,
    Inconclusive,
}

/// Approximates all complex roots; `None` if the iteration does not settle
/// or the coefficients do not fit in `f64`.
pub fn numeric_roots(f: &ExactPoly) -> Option<Vec<Complex64>> {
    let deg = f.degree()?;
    let lead = f.leading_coeff()?.to_f64()?;
    let coeffs: Vec<f64> = f
        .coeffs()
        .iter()
        .map(|c| c.to_f64().map(|v| v / lead))
        .collect::<Option<_>>()?;
    if coeffs.iter().any(|c| !c.is_finite()) {
        return None;
    }
    if deg == 0 {
        return Some(Vec::new());
    }
    let d1: Vec<f64> = (1..=deg).map(|i| coeffs[i] * i as f64).collect();
    let horner = |cs: &[f64], z: Complex64| {
        cs.iter().rev().fold(Complex64::zero(), |acc, &c| acc * z + c)
    };

    // Fujiwara-style radius for the starting circle
    let radius = (0..deg)
        .map(|i| Float::powf(Float::abs(coeffs[i]), 1.0 / (deg - i) as f64))
        .fold(0.0, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / deg as f64 + 0.4))
        .collect();

    for _ in 0..MAX_ITERS {
        let mut worst = 0.0f64;
        for k in 0..deg {
            let p = horner(&coeffs, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let w = p / horner(&d1, z[k]);
            let repulsion: Complex64 = (0..deg)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = w / (Complex64::new(1.0, 0.0) - w * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                return None;
            }
            z[k] -= step;
            worst = worst.max(step.norm() / (1.0 + z[k].norm()));
        }
        if worst < 1e-15 {
            return Some(z);
        }
    }
    None
}

/// Numeric weak-Hurwitz verdict for cross-checking, meant for degree ≤ 12.
pub fn cross_check_oracle(f: &ExactPoly) -> OracleVerdict {
    if f.is_zero() {
        return OracleVerdict::Inconclusive;
    }
    let Some(roots) = numeric_roots(f) else {
        return OracleVerdict::Inconclusive;
    };
    // a root clearly in the right half-plane decides, even next to boundary roots
    if roots.iter().any(|r| r.re >= AXIS_MARGIN) {
        OracleVerdict::Unstable
    } else if roots.iter().any(|r| r.re > -AXIS_MARGIN) {
        OracleVerdict::Inconclusive
    } else {
        OracleVerdict::Stable
    }
}
