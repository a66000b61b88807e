//! Real-root counting, isolation and interlacing via Sturm sequences.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::chain::{count_variations, int_chain};
use crate::polycore::{gcd, squarefree_part, ExactPoly, IntPoly, Rational};
use crate::{Error, Result};

/// An endpoint of a counting interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    At(Rational),
    PosInf,
}

/// Sturm sequence of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<IntPoly>,
}

impl SturmSequence {
    /// Built from the squarefree part of `f`, so counts are of distinct roots.
    pub fn new(f: &ExactPoly) -> Result<Self> {
        let sq = IntPoly::primitive_from(&squarefree_part(f)?);
        let d = sq.derivative();
        Ok(SturmSequence { chain: int_chain(sq, d) })
    }

    /// The squarefree polynomial the sequence was built from.
    pub fn base(&self) -> &IntPoly {
        &self.chain[0]
    }

    pub fn variations(&self, at: &Bound) -> usize {
        let signs = self.chain.iter().map(|p| match at {
            Bound::NegInf => p.sign_at_infinity(false),
            Bound::PosInf => p.sign_at_infinity(true),
            Bound::At(x) => p.sign_at_rational(x),
        });
        count_variations(signs)
    }

    /// Distinct roots in `(lo, hi]` (or `(lo, ∞)` when `hi = +∞`).
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        if !bound_lt(lo, hi) {
            return 0;
        }
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    /// Distinct roots in the open interval `(lo, hi)`.
    fn count_open(&self, lo: &Rational, hi: &Rational) -> usize {
        let closed = self.count(&Bound::At(lo.clone()), &Bound::At(hi.clone()));
        closed - usize::from(self.is_root(hi) && lo < hi)
    }

    pub fn is_root(&self, x: &Rational) -> bool {
        self.base().sign_at_rational(x) == 0
    }

    pub fn total(&self) -> usize {
        self.count(&Bound::NegInf, &Bound::PosInf)
    }
}

fn bound_lt(a: &Bound, b: &Bound) -> bool {
    match (a, b) {
        (Bound::NegInf, Bound::NegInf) | (Bound::PosInf, _) | (_, Bound::NegInf) => false,
        (Bound::NegInf, _) | (_, Bound::PosInf) => true,
        (Bound::At(x), Bound::At(y)) => x < y,
    }
}

/// Number of distinct real roots of `f` in `(lo, hi]`.
pub fn sturm_real_count(f: &ExactPoly, lo: &Bound, hi: &Bound) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("sturm_real_count"));
    }
    Ok(SturmSequence::new(f)?.count(lo, hi))
}

/// True iff every root of `f` (counted with multiplicity) is real.
pub fn all_roots_real(f: &ExactPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("all_roots_real"));
    }
    let seq = SturmSequence::new(f)?;
    Ok(Some(seq.total()) == seq.base().degree())
}

/// `1 + max |a_i| / |a_n|`: every root lies strictly inside `(−B, B)`.
pub fn cauchy_bound(f: &ExactPoly) -> Result<Rational> {
    let lead = f.leading_coeff().ok_or(Error::ZeroPolynomial("cauchy_bound"))?.abs();
    let d = f.coeffs().len() - 1;
    let max = f.coeffs()[..d].iter().map(Signed::abs).max().unwrap_or_else(Rational::zero);
    Ok(Rational::one() + max / lead)
}

fn half(a: &Rational, b: &Rational) -> Rational {
    (a + b) / Rational::from_integer(2.into())
}

/// A real root either pinned exactly or known to lie strictly inside `(lo, hi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootInterval {
    Exact(Rational),
    Open(Rational, Rational),
}

impl RootInterval {
    pub fn lower(&self) -> &Rational {
        match self {
            RootInterval::Exact(x) | RootInterval::Open(x, _) => x,
        }
    }

    pub fn upper(&self) -> &Rational {
        match self {
            RootInterval::Exact(x) | RootInterval::Open(_, x) => x,
        }
    }

    pub fn width(&self) -> Rational {
        self.upper() - self.lower()
    }

    fn disjoint(&self, other: &RootInterval) -> bool {
        use RootInterval::*;
        match (self, other) {
            (Exact(p), Exact(q)) => p != q,
            (Exact(p), Open(a, b)) | (Open(a, b), Exact(p)) => p <= a || p >= b,
            (Open(a, b), Open(c, d)) => b <= c || d <= a,
        }
    }

    /// Halves an isolating interval of a root of `seq`.
    fn refine(&self, seq: &SturmSequence) -> RootInterval {
        match self {
            RootInterval::Exact(_) => self.clone(),
            RootInterval::Open(lo, hi) => {
                let mid = half(lo, hi);
                if seq.is_root(&mid) {
                    RootInterval::Exact(mid)
                } else if seq.count_open(lo, &mid) == 1 {
                    RootInterval::Open(lo.clone(), mid)
                } else {
                    RootInterval::Open(mid, hi.clone())
                }
            }
        }
    }
}

/// Isolating intervals for every distinct real root, in ascending order.
pub fn isolate_real_roots(f: &ExactPoly) -> Result<Vec<RootInterval>> {
    let seq = SturmSequence::new(f)?;
    Ok(isolate_with(&seq, f))
}

fn isolate_with(seq: &SturmSequence, f: &ExactPoly) -> Vec<RootInterval> {
    let bound = cauchy_bound(f).expect("nonzero polynomial");
    let mut out = Vec::new();
    let mut stack = Vec::new();
    let lo = -bound.clone();
    let n = seq.count_open(&lo, &bound);
    stack.push((lo, bound, n));
    while let Some((lo, hi, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push(RootInterval::Open(lo, hi)),
            _ => {
                let mid = half(&lo, &hi);
                let left = seq.count_open(&lo, &mid);
                let pinned = seq.is_root(&mid);
                let right = n - left - usize::from(pinned);
                if pinned {
                    out.push(RootInterval::Exact(mid.clone()));
                }
                stack.push((lo, mid.clone(), left));
                stack.push((mid, hi, right));
            }
        }
    }
    out.sort_by(|a, b| a.lower().cmp(b.lower()));
    out
}

/// Brackets around the smallest root `m` and the largest root `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremeRoots {
    /// `min_lo < m ≤ min_hi`.
    pub min_lo: Rational,
    pub min_hi: Rational,
    /// `max_lo ≤ M < max_hi`.
    pub max_lo: Rational,
    pub max_hi: Rational,
}

/// Brackets the extreme real roots to width `≤ tol` by Sturm bisection from
/// the Cauchy bound. A root hit exactly by a bisection point collapses its
/// bracket to that point.
pub fn isolate_extreme_roots(f: &ExactPoly, tol: &Rational) -> Result<ExtremeRoots> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("isolate_extreme_roots"));
    }
    if !tol.is_positive() {
        return Err(Error::Precondition(String::from("tolerance must be positive")));
    }
    let seq = SturmSequence::new(f)?;
    if seq.total() == 0 {
        return Err(Error::Precondition(String::from("polynomial has no real roots")));
    }
    let bound = cauchy_bound(f)?;

    // largest root: M in (lo, hi), nothing at or above hi
    let (mut lo, mut hi) = (-bound.clone(), bound.clone());
    while &hi - &lo > *tol {
        let mid = half(&lo, &hi);
        let above = seq.count(&Bound::At(mid.clone()), &Bound::PosInf);
        if above > 0 {
            lo = mid;
        } else if seq.is_root(&mid) {
            lo = mid.clone();
            hi = mid;
            break;
        } else {
            hi = mid;
        }
    }
    let (max_lo, max_hi) = (lo, hi);

    // smallest root: m in (lo, hi), nothing at or below lo
    let (mut lo, mut hi) = (-bound.clone(), bound);
    while &hi - &lo > *tol {
        let mid = half(&lo, &hi);
        let at_or_below = seq.count(&Bound::NegInf, &Bound::At(mid.clone()));
        let pinned = seq.is_root(&mid);
        if pinned && at_or_below == 1 {
            lo = mid.clone();
            hi = mid;
            break;
        } else if at_or_below > 0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(ExtremeRoots { min_lo: lo, min_hi: hi, max_lo, max_hi })
}

/// How two real-rooted polynomials are expected to interlace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InterlaceMode {
    Strict,
    /// Both share the root `r`, all other roots lie on one side of it, and
    /// the remaining roots strictly interlace.
    SharedOuterRoot(Rational),
}

/// Interlacing test for `deg f = deg g + 1`, both real-rooted.
pub fn interlace_check(f: &ExactPoly, g: &ExactPoly, mode: &InterlaceMode) -> Result<bool> {
    let (df, dg) = match (f.degree(), g.degree()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::ZeroPolynomial("interlace_check")),
    };
    if df != dg + 1 {
        return Err(Error::Precondition(format!(
            "interlace_check needs deg f = deg g + 1, got {df} and {dg}"
        )));
    }
    if !all_roots_real(f)? || !all_roots_real(g)? {
        return Err(Error::Precondition(String::from("interlace_check needs real-rooted inputs")));
    }
    match mode {
        InterlaceMode::Strict => strict_interlace(f, g),
        InterlaceMode::SharedOuterRoot(r) => {
            if !f.eval(r).is_zero() || !g.eval(r).is_zero() {
                return Ok(false);
            }
            let lin = ExactPoly::new(alloc::vec![-r.clone(), Rational::one()]);
            let (qf, qg) = (f.div_exact(&lin)?, g.div_exact(&lin)?);
            let below = |q: &ExactPoly| -> Result<usize> {
                sturm_real_count(q, &Bound::NegInf, &Bound::At(r.clone()))
            };
            // r must stay outside the remaining roots: all below, or all above
            for q in [&qf, &qg] {
                let d = q.degree().unwrap_or(0);
                let n = below(q)?;
                if q.eval(r).is_zero() {
                    return Ok(false);
                }
                let all_below = n == d;
                let all_above = n == 0;
                if !(all_below || all_above) {
                    return Ok(false);
                }
            }
            if qf.degree() > Some(0) && qg.degree() > Some(0) && (below(&qf)? == 0) != (below(&qg)? == 0)
            {
                return Ok(false);
            }
            strict_interlace(&qf, &qg)
        }
    }
}

fn strict_interlace(f: &ExactPoly, g: &ExactPoly) -> Result<bool> {
    let (df, dg) = (f.degree().unwrap_or(0), g.degree().unwrap_or(0));
    let (sf, sg) = (SturmSequence::new(f)?, SturmSequence::new(g)?);
    // strict interlacing needs simple roots and no common root
    if sf.total() != df || sg.total() != dg || !gcd(f, g)?.is_constant() {
        return Ok(false);
    }
    let mut rf = isolate_with(&sf, f);
    let mut rg = isolate_with(&sg, g);
    loop {
        let overlap = rf.iter().any(|a| rg.iter().any(|b| !a.disjoint(b)));
        if !overlap {
            break;
        }
        rf = rf.iter().map(|r| r.refine(&sf)).collect();
        rg = rg.iter().map(|r| r.refine(&sg)).collect();
    }
    let mut tagged: Vec<(&RootInterval, bool)> =
        rf.iter().map(|r| (r, true)).chain(rg.iter().map(|r| (r, false))).collect();
    tagged.sort_by(|a, b| a.0.lower().cmp(b.0.lower()));
    Ok(tagged.iter().enumerate().all(|(i, (_, from_f))| *from_f == (i % 2 == 0)))
}
