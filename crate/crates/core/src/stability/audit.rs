//! Process-wide consistency counters for the Euclidean chain machinery.
//!
//! Parity checks on the half-plane count always run. The scaling audit is
//! opt-in because it recomputes every chain over ℚ without rescaling.

use core::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use super::chain::{euclid_chain_unscaled, int_variations_at_infinity, sign_variations_at_infinity, Infinity};
use crate::polycore::{ExactPoly, IntPoly};

static SCALING_AUDIT: AtomicBool = AtomicBool::new(false);
static PARITY_CHECKS: AtomicUsize = AtomicUsize::new(0);
static PARITY_VIOLATIONS: AtomicUsize = AtomicUsize::new(0);
static SCALING_CHECKS: AtomicUsize = AtomicUsize::new(0);
static SCALING_VIOLATIONS: AtomicUsize = AtomicUsize::new(0);

/// Counter values at one point in time.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AuditSnapshot {
    pub parity_checks: usize,
    pub parity_violations: usize,
    pub scaling_checks: usize,
    pub scaling_violations: usize,
}

/// Turns the scaled-vs-unscaled chain comparison on or off.
pub fn set_scaling_audit(on: bool) {
    SCALING_AUDIT.store(on, Ordering::SeqCst);
}

pub fn reset_audit() {
    for c in [&PARITY_CHECKS, &PARITY_VIOLATIONS, &SCALING_CHECKS, &SCALING_VIOLATIONS] {
        c.store(0, Ordering::SeqCst);
    }
}

pub fn audit_snapshot() -> AuditSnapshot {
    AuditSnapshot {
        parity_checks: PARITY_CHECKS.load(Ordering::SeqCst),
        parity_violations: PARITY_VIOLATIONS.load(Ordering::SeqCst),
        scaling_checks: SCALING_CHECKS.load(Ordering::SeqCst),
        scaling_violations: SCALING_VIOLATIONS.load(Ordering::SeqCst),
    }
}

pub(super) fn record_parity_ok() {
    PARITY_CHECKS.fetch_add(1, Ordering::Relaxed);
}

pub(super) fn record_parity_violation() {
    PARITY_CHECKS.fetch_add(1, Ordering::Relaxed);
    PARITY_VIOLATIONS.fetch_add(1, Ordering::Relaxed);
}

/// Compares the scaled integer chain against the plain rational chain:
/// same length, same degrees, same leading signs, same variation counts.
pub(super) fn check_scaling(scaled: &[IntPoly], f0: &ExactPoly, f1: &ExactPoly) {
    if !SCALING_AUDIT.load(Ordering::Relaxed) {
        return;
    }
    SCALING_CHECKS.fetch_add(1, Ordering::Relaxed);
    let ok = match euclid_chain_unscaled(f0, f1) {
        Ok(plain) => {
            plain.len() == scaled.len()
                && plain.iter().zip(scaled).all(|(a, b)| {
                    a.degree() == b.degree() && a.leading_sign() == b.leading_sign()
                })
                && [Infinity::Plus, Infinity::Minus].iter().all(|&dir| {
                    sign_variations_at_infinity(&plain, dir) == int_variations_at_infinity(scaled, dir)
                })
        }
        Err(_) => false,
    };
    if !ok {
        SCALING_VIOLATIONS.fetch_add(1, Ordering::Relaxed);
    }
}
