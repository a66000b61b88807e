//! Generalized Sturm chains and sign variations at infinity.

use alloc::format;
use alloc::vec::Vec;

use crate::polycore::{ExactPoly, IntPoly};
use crate::{Error, Result};

/// Direction for the limit of a chain's sign pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Infinity {
    Plus,
    Minus,
}

/// Euclidean chain over ℤ: `f_{k+1} = −prem(f_{k−1}, f_k)` made primitive.
///
/// Every element is a positive multiple of the corresponding element of the
/// rational chain `f_{k+1} = −rem(f_{k−1}, f_k)`; the last element is a
/// multiple of `gcd(f_0, f_1)`.
pub(crate) fn int_chain(f0: IntPoly, f1: IntPoly) -> Vec<IntPoly> {
    let mut chain = Vec::new();
    chain.push(f0.primitive());
    if f1.is_zero() {
        return chain;
    }
    chain.push(f1.primitive());
    loop {
        let n = chain.len();
        let r = chain[n - 2].positive_pseudo_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg().primitive());
    }
    chain
}

fn check_pre(f0: &ExactPoly, f1: &ExactPoly) -> Result<()> {
    let d0 = f0.degree().ok_or(Error::ZeroPolynomial("euclid_chain"))?;
    if let Some(d1) = f1.degree() {
        if d1 >= d0 {
            return Err(Error::Precondition(format!(
                "euclid_chain needs deg f1 < deg f0, got {d1} ≥ {d0}"
            )));
        }
    }
    Ok(())
}

/// The generalized Sturm chain `f_0, f_1, …, f_m` ending at the gcd.
///
/// Elements are primitive integer polynomials, each a positive multiple of
/// the plain rational chain element, so all sign patterns are preserved.
pub fn euclid_chain(f0: &ExactPoly, f1: &ExactPoly) -> Result<Vec<ExactPoly>> {
    check_pre(f0, f1)?;
    let chain = int_chain(IntPoly::primitive_from(f0), IntPoly::primitive_from(f1));
    Ok(chain.iter().map(IntPoly::to_exact).collect())
}

/// The same chain computed over ℚ with no rescaling at all.
///
/// Much slower at high degree; kept as the reference for the scaling audit.
pub fn euclid_chain_unscaled(f0: &ExactPoly, f1: &ExactPoly) -> Result<Vec<ExactPoly>> {
    check_pre(f0, f1)?;
    let mut chain = Vec::new();
    chain.push(f0.clone());
    if f1.is_zero() {
        return Ok(chain);
    }
    chain.push(f1.clone());
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1])?;
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
    }
    Ok(chain)
}

/// Number of sign changes, zeros omitted.
pub fn count_variations(signs: impl IntoIterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.into_iter().filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign_at_infinity(p: &ExactPoly, dir: Infinity) -> i8 {
    let s = p.leading_sign();
    match (dir, p.degree()) {
        (Infinity::Minus, Some(d)) if d % 2 == 1 => -s,
        _ => s,
    }
}

/// `V` of the chain at `±∞`, read off leading coefficients and degrees.
pub fn sign_variations_at_infinity(chain: &[ExactPoly], dir: Infinity) -> usize {
    count_variations(chain.iter().map(|p| sign_at_infinity(p, dir)))
}

pub(crate) fn int_variations_at_infinity(chain: &[IntPoly], dir: Infinity) -> usize {
    count_variations(chain.iter().map(|p| p.sign_at_infinity(dir == Infinity::Plus)))
}
