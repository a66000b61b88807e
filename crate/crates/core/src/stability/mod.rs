//! Exact weak Hurwitz stability.
//!
//! A real polynomial `f` of degree `n` is weakly Hurwitz stable when it has no
//! zero with `Re x > 0`. The decision rotates `f` into `g(x) = (−i)^n f(ix)`,
//! which maps the open right half-plane onto the open lower half-plane, and
//! then counts zeros of `g` in the open upper half-plane with a generalized
//! Sturm chain on `(Re g, Im g)`:
//!
//! ```text
//! p = (deg q + V(+∞) − V(−∞)) / 2,    q = g / gcd(Re g, Im g)
//! ```
//!
//! `f` is stable iff `gcd(Re g, Im g)` has only real zeros and `p = deg q`.

mod audit;
mod chain;
mod oracle;
mod sturm;

use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::polycore::{gcd, ExactPoly, IntPoly, Rational};
use crate::{Error, Result};

pub use audit::{audit_snapshot, reset_audit, set_scaling_audit, AuditSnapshot};
pub use chain::{
    count_variations, euclid_chain, euclid_chain_unscaled, sign_variations_at_infinity, Infinity,
};
pub use oracle::{cross_check_oracle, numeric_roots, OracleVerdict, AXIS_MARGIN};
pub use sturm::{
    all_roots_real, cauchy_bound, interlace_check, isolate_extreme_roots, isolate_real_roots,
    sturm_real_count, Bound, ExtremeRoots, InterlaceMode, RootInterval, SturmSequence,
};

/// `h(x) = re(x) + i·im(x)` with real polynomial parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPoly {
    pub re: ExactPoly,
    pub im: ExactPoly,
}

impl SplitPoly {
    pub fn degree(&self) -> Option<usize> {
        self.re.degree().max(self.im.degree())
    }
}

/// Exact verdict together with the data that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityCertificate {
    pub verdict: bool,
    pub degree: usize,
    pub rotated: SplitPoly,
    pub gcd_degree: usize,
    pub gcd_all_real: bool,
    /// Zeros of the gcd-free quotient in the open upper half-plane.
    pub p_upper: usize,
    pub chain_length: usize,
    pub v_plus: usize,
    pub v_minus: usize,
}

/// `(−i)^n f(ix)` split into real and imaginary parts.
pub fn rotate(f: &ExactPoly) -> Result<SplitPoly> {
    let n = f.degree().ok_or(Error::ZeroPolynomial("rotate"))?;
    let mut re = Vec::with_capacity(n + 1);
    let mut im = Vec::with_capacity(n + 1);
    for (k, c) in f.coeffs().iter().enumerate() {
        // coefficient of x^k picks up i^(k − n)
        let (r, i) = match (k + 4 * n - n) % 4 {
            0 => (c.clone(), Rational::zero()),
            1 => (Rational::zero(), c.clone()),
            2 => (-c, Rational::zero()),
            _ => (Rational::zero(), -c),
        };
        re.push(r);
        im.push(i);
    }
    Ok(SplitPoly { re: ExactPoly::new(re), im: ExactPoly::new(im) })
}

/// Full result of the upper half-plane count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPlaneCount {
    pub p_upper: usize,
    pub gcd: ExactPoly,
    pub quotient_degree: usize,
    pub chain_length: usize,
    pub v_plus: usize,
    pub v_minus: usize,
}

/// Zeros of `h / gcd(re, im)` in the open upper half-plane, with the gcd.
pub fn upper_halfplane_count(h: &SplitPoly) -> Result<(usize, ExactPoly)> {
    let c = upper_halfplane_detail(h)?;
    Ok((c.p_upper, c.gcd))
}

pub fn upper_halfplane_detail(h: &SplitPoly) -> Result<HalfPlaneCount> {
    let dre = h.re.degree().ok_or(Error::ZeroPolynomial("upper_halfplane_count"))?;
    if h.im.degree().is_some_and(|d| d >= dre) {
        return Err(Error::Precondition(format!(
            "leading coefficient must be real: deg im = {:?} ≥ deg re = {dre}",
            h.im.degree()
        )));
    }
    let g = gcd(&h.re, &h.im)?;
    let q_re = h.re.div_exact(&g)?;
    let q_im = h.im.div_exact(&g)?;
    let n = q_re.degree().expect("quotient of nonzero polynomial");

    let chain = chain::int_chain(IntPoly::primitive_from(&q_re), IntPoly::primitive_from(&q_im));
    let v_plus = chain::int_variations_at_infinity(&chain, Infinity::Plus);
    let v_minus = chain::int_variations_at_infinity(&chain, Infinity::Minus);
    audit::check_scaling(&chain, &q_re, &q_im);

    let twice = (n + v_plus)
        .checked_sub(v_minus)
        .filter(|t| t % 2 == 0 && t / 2 <= n)
        .ok_or_else(|| {
            audit::record_parity_violation();
            Error::Internal(format!(
                "upper half-plane count not an integer in [0, {n}]: n = {n}, V+ = {v_plus}, V- = {v_minus}"
            ))
        })?;
    audit::record_parity_ok();
    Ok(HalfPlaneCount {
        p_upper: twice / 2,
        gcd: g,
        quotient_degree: n,
        chain_length: chain.len(),
        v_plus,
        v_minus,
    })
}

/// Decides exactly whether `f` has no zero in the open right half-plane.
pub fn is_weakly_hurwitz(f: &ExactPoly) -> Result<StabilityCertificate> {
    let degree = f.degree().ok_or(Error::ZeroPolynomial("is_weakly_hurwitz"))?;
    let rotated = rotate(f)?;
    let count = upper_halfplane_detail(&rotated)?;
    let gcd_degree = count.gcd.degree().unwrap_or(0);
    let gcd_all_real = count.gcd.is_constant() || all_roots_real(&count.gcd)?;
    Ok(StabilityCertificate {
        verdict: gcd_all_real && count.p_upper == degree - gcd_degree,
        degree,
        rotated,
        gcd_degree,
        gcd_all_real,
        p_upper: count.p_upper,
        chain_length: count.chain_length,
        v_plus: count.v_plus,
        v_minus: count.v_minus,
    })
}

/// Outcome of the coefficient-sign filter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignPrecheck {
    PossiblyStable,
    CertainlyUnstable,
}

/// Necessary condition: after making the leading coefficient positive, a
/// weakly stable polynomial has no negative coefficient.
pub fn coeff_sign_precheck(f: &ExactPoly) -> SignPrecheck {
    let flip = f.leading_sign() < 0;
    let has_negative = f.coeffs().iter().any(|c| if flip { c.is_positive() } else { c.is_negative() });
    if has_negative {
        SignPrecheck::CertainlyUnstable
    } else {
        SignPrecheck::PossiblyStable
    }
}

/// Which side of the vertical line `Re x = τ` to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// No zero with `Re x > τ`.
    RightOf,
    /// No zero with `Re x < τ`.
    LeftOf,
}

/// True iff `f` has no zero strictly on the given side of `Re x = τ`.
pub fn nonvanishing_halfplane(f: &ExactPoly, tau: &Rational, side: Side) -> Result<bool> {
    let moved = match side {
        Side::RightOf => f.compose_linear(&Rational::from_integer(1.into()), tau),
        Side::LeftOf => f.compose_linear(&Rational::from_integer((-1).into()), tau),
    };
    Ok(is_weakly_hurwitz(&moved)?.verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{int, rat};
    use crate::sequences::{generate, SequenceSpec};
    use crate::turan::turan;

    fn p(c: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(c)
    }

    #[test]
    fn rotate_examples() {
        assert_eq!(rotate(&p(&[1, 0, 1])).unwrap(), SplitPoly { re: p(&[-1, 0, 1]), im: p(&[]) });
        assert_eq!(
            rotate(&p(&[0, -8, -2, 0, 1])).unwrap(),
            SplitPoly { re: p(&[0, 0, 2, 0, 1]), im: p(&[0, -8]) }
        );
        assert_eq!(rotate(&p(&[1, 1])).unwrap(), SplitPoly { re: p(&[0, 1]), im: p(&[-1]) });
        assert!(rotate(&ExactPoly::zero()).is_err());
    }

    #[test]
    fn upper_count_examples() {
        let h = SplitPoly { re: p(&[0, 1]), im: p(&[-1]) };
        assert_eq!(upper_halfplane_count(&h).unwrap(), (1, p(&[1])));
        let h = SplitPoly { re: p(&[0, 1]), im: p(&[1]) };
        assert_eq!(upper_halfplane_count(&h).unwrap(), (0, p(&[1])));
        let h = SplitPoly { re: p(&[0, 0, 2, 0, 1]), im: p(&[0, -8]) };
        let c = upper_halfplane_detail(&h).unwrap();
        assert_eq!(c.gcd, p(&[0, 1]));
        assert_eq!(c.quotient_degree, 3);
        assert_eq!((c.p_upper, c.v_plus, c.v_minus), (2, 1, 0));
        let bad = SplitPoly { re: p(&[0, 1]), im: p(&[0, 1]) };
        assert!(upper_halfplane_count(&bad).is_err());
    }

    #[test]
    fn hurwitz_examples() {
        assert!(!is_weakly_hurwitz(&p(&[0, -8, -2, 0, 1])).unwrap().verdict);
        assert!(is_weakly_hurwitz(&p(&[0, -1])).unwrap().verdict);
        assert!(is_weakly_hurwitz(&p(&[1, 0, 1])).unwrap().verdict);
        assert!(!is_weakly_hurwitz(&p(&[-1, 0, 1])).unwrap().verdict);
        let c = is_weakly_hurwitz(&p(&[-7])).unwrap();
        assert!(c.verdict && c.degree == 0 && c.p_upper == 0 && c.gcd_degree == 0);
        assert!(is_weakly_hurwitz(&ExactPoly::zero()).is_err());
    }

    #[test]
    fn gcd_with_nonreal_zeros_is_unstable() {
        // zeros ±i, ±i√2 lie on the boundary: rotated gcd is real-rooted
        let f = p(&[1, 0, 1]) * p(&[2, 0, 1]);
        let c = is_weakly_hurwitz(&f).unwrap();
        assert!(c.verdict && c.gcd_all_real && c.gcd_degree == 4);
        // x^4 + 4 has zeros ±1 ± i; its rotation is x^4 + 4 with im = 0, so
        // the whole polynomial is the gcd and it is not real-rooted
        let c = is_weakly_hurwitz(&p(&[4, 0, 0, 0, 1])).unwrap();
        assert!(!c.verdict && !c.gcd_all_real && c.gcd_degree == 4);
        // (x+1)(x^2+1)(x^2+2x+2): boundary pair plus left-half zeros
        let g = p(&[1, 1]) * p(&[1, 0, 1]) * p(&[2, 2, 1]);
        let c = is_weakly_hurwitz(&g).unwrap();
        assert!(c.verdict && c.gcd_degree == 2 && c.p_upper == 3);
    }

    #[test]
    fn precheck_examples() {
        assert_eq!(coeff_sign_precheck(&p(&[0, -8, -2, 0, 1])), SignPrecheck::CertainlyUnstable);
        assert_eq!(coeff_sign_precheck(&p(&[0, -1])), SignPrecheck::PossiblyStable);
        assert_eq!(coeff_sign_precheck(&p(&[1, 1, 1])), SignPrecheck::PossiblyStable);
        assert_eq!(coeff_sign_precheck(&p(&[-1, 2, -3])), SignPrecheck::CertainlyUnstable);
    }

    #[test]
    fn halfplane_examples() {
        let f = p(&[1, 0, -1]);
        assert!(nonvanishing_halfplane(&f, &int(1), Side::RightOf).unwrap());
        assert!(!nonvanishing_halfplane(&f, &rat(1, 2), Side::RightOf).unwrap());
        assert!(nonvanishing_halfplane(&f, &int(-1), Side::LeftOf).unwrap());
        assert!(!nonvanishing_halfplane(&f, &int(0), Side::LeftOf).unwrap());
        let g = p(&[1, 0, 1]);
        assert!(nonvanishing_halfplane(&g, &rat(1, 3), Side::RightOf).unwrap());
        assert!(nonvanishing_halfplane(&g, &rat(-1, 3), Side::LeftOf).unwrap());
    }

    #[test]
    fn bell_turan_small_k_stable() {
        let bell = generate(&SequenceSpec::Bell, 10).unwrap();
        for k in 0..=8 {
            let t = turan(&bell, k).unwrap();
            let cert = is_weakly_hurwitz(&t).unwrap();
            assert!(cert.verdict, "k = {k}");
            assert_eq!(coeff_sign_precheck(&t), SignPrecheck::PossiblyStable);
        }
    }
}
