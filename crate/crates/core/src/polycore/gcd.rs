use super::{ExactPoly, IntPoly};
use crate::{Error, Result};

/// Monic greatest common divisor.
///
/// Runs Euclid over ℤ on primitive parts: each pseudo-remainder is divided by
/// its content before the next step, which keeps coefficient growth linear in
/// practice instead of the blowup seen with naive rational Euclid.
pub fn gcd(p: &ExactPoly, q: &ExactPoly) -> Result<ExactPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut a, mut b) = (IntPoly::primitive_from(p), IntPoly::primitive_from(q));
    if a.degree() < b.degree() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.positive_pseudo_rem(&b).primitive();
        a = b;
        b = r;
    }
    a.to_exact().monic()
}

/// `p / gcd(p, p')`, monic: the product of the distinct irreducible factors.
pub fn squarefree_part(p: &ExactPoly) -> Result<ExactPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree_part"));
    }
    let g = gcd(p, &p.derivative())?;
    p.div_exact(&g)?.monic()
}
