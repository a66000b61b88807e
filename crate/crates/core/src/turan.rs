//! Turán-type expressions built exactly from polynomial sequences.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::polycore::{binomial, factorial, ExactPoly, Rational};
use crate::{Error, Result};

/// Which expression to build from a sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExprKind {
    /// `P_{k+1}² − P_{k+2} P_k`.
    Turan,
    /// The `n`-th extended Turán expression at index `k`, `n ≥ 1`.
    ExtendedTuran(usize),
    /// The `n`-th extended Laguerre expression of `P_k`.
    ExtendedLaguerre(usize),
    /// `P_k'² − P_k'' P_k`.
    Wronskian,
}

/// An expression request. After construction the result `R` is replaced by
/// `R(−x)` when `reflect` is set, and then by `R(x + shift)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprRequest {
    pub kind: ExprKind,
    pub k: usize,
    pub reflect: bool,
    pub shift: Rational,
}

impl ExprRequest {
    pub fn new(kind: ExprKind, k: usize) -> Self {
        ExprRequest { kind, k, reflect: false, shift: Rational::zero() }
    }

    pub fn reflected(mut self, reflect: bool) -> Self {
        self.reflect = reflect;
        self
    }

    pub fn shifted(mut self, shift: Rational) -> Self {
        self.shift = shift;
        self
    }

    /// Highest sequence index the request reads.
    pub fn max_index(&self) -> usize {
        match self.kind {
            ExprKind::Turan => self.k + 2,
            ExprKind::ExtendedTuran(n) => self.k + 2 * n,
            ExprKind::ExtendedLaguerre(_) | ExprKind::Wronskian => self.k,
        }
    }
}

/// Builds the requested expression from `seq`.
pub fn build(seq: &[ExactPoly], req: &ExprRequest) -> Result<ExactPoly> {
    let expr = match req.kind {
        ExprKind::Turan => turan(seq, req.k)?,
        ExprKind::ExtendedTuran(n) => extended_turan(seq, req.k, n)?,
        ExprKind::ExtendedLaguerre(n) => extended_laguerre(term(seq, req.k)?, n)?,
        ExprKind::Wronskian => wronskian(term(seq, req.k)?)?,
    };
    Ok(transform(&expr, req.reflect, &req.shift))
}

/// `R(−x)` if `reflect`, then composed with `x ↦ x + shift`.
pub fn transform(expr: &ExactPoly, reflect: bool, shift: &Rational) -> ExactPoly {
    let out = if reflect { expr.reflect() } else { expr.clone() };
    if shift.is_zero() {
        out
    } else {
        out.compose_linear(&Rational::one(), shift)
    }
}

fn term(seq: &[ExactPoly], i: usize) -> Result<&ExactPoly> {
    seq.get(i).ok_or(Error::SequenceTooShort { needed: i, available: seq.len() })
}

/// The `k`-th Turán expression `P_{k+1}² − P_{k+2}·P_k`.
pub fn turan(seq: &[ExactPoly], k: usize) -> Result<ExactPoly> {
    let (p0, p1, p2) = (term(seq, k)?, term(seq, k + 1)?, term(seq, k + 2)?);
    Ok(p1 * p1 - p2 * p0)
}

/// Coefficients `(−1)^{n+j} C(2n, j) / (2n)!` for `j = 0..=2n`.
fn alternating_weights(n: usize) -> Vec<Rational> {
    let denom = factorial(2 * n);
    (0..=2 * n)
        .map(|j| {
            let w = Rational::new(binomial(2 * n, j), denom.clone());
            if (n + j) % 2 == 1 {
                -w
            } else {
                w
            }
        })
        .collect()
}

/// Folded weighted sum `Σ_j w_j A_j A_{2n−j}` using the `j ↔ 2n−j` symmetry.
fn symmetric_sum(n: usize, factor: impl Fn(usize) -> ExactPoly) -> ExactPoly {
    let weights = alternating_weights(n);
    let two = Rational::from_integer(BigInt::from(2));
    let mut acc = ExactPoly::zero();
    for (j, w) in weights.iter().enumerate().take(n) {
        let prod = &factor(j) * &factor(2 * n - j);
        acc = acc + prod.scale(&(w * &two));
    }
    let mid = factor(n);
    acc + (&mid * &mid).scale(&weights[n])
}

/// `T_k^{(n)} = Σ_{j=0}^{2n} (−1)^{n+j}/(2n)! · C(2n,j) · P_{j+k} P_{2n+k−j}`.
///
/// The `1/(2n)!` factor is kept, so `n = 1` gives exactly [`turan`].
pub fn extended_turan(seq: &[ExactPoly], k: usize, n: usize) -> Result<ExactPoly> {
    if n == 0 {
        return Err(Error::Precondition(alloc::string::String::from(
            "extended Turán expression needs n ≥ 1",
        )));
    }
    term(seq, k + 2 * n)?;
    Ok(symmetric_sum(n, |j| seq[k + j].clone()))
}

/// The unfolded sum, kept as an independent check on the folding in [`extended_turan`].
pub fn extended_turan_unfolded(seq: &[ExactPoly], k: usize, n: usize) -> Result<ExactPoly> {
    term(seq, k + 2 * n)?;
    let weights = alternating_weights(n);
    let mut acc = ExactPoly::zero();
    for (j, w) in weights.iter().enumerate() {
        acc = acc + (&seq[j + k] * &seq[2 * n + k - j]).scale(w);
    }
    Ok(acc)
}

/// `ℒ_n(f) = Σ_{j=0}^{2n} (−1)^{n+j}/(2n)! · C(2n,j) · f^{(j)} f^{(2n−j)}`.
pub fn extended_laguerre(f: &ExactPoly, n: usize) -> Result<ExactPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("extended_laguerre"));
    }
    let mut derivs = Vec::with_capacity(2 * n + 1);
    derivs.push(f.clone());
    for j in 1..=2 * n {
        let next = derivs[j - 1].derivative();
        derivs.push(next);
    }
    Ok(symmetric_sum(n, |j| derivs[j].clone()))
}

/// `W(f) = f'² − f''·f`.
pub fn wronskian(f: &ExactPoly) -> Result<ExactPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("wronskian"));
    }
    let d1 = f.derivative();
    let d2 = d1.derivative();
    Ok(&d1 * &d1 - &d2 * f)
}

/// `a f² + b f f' + c x (f f'' − f'²)`.
pub fn fisk_expression(f: &ExactPoly, a: &Rational, b: &Rational, c: &Rational) -> ExactPoly {
    let d1 = f.derivative();
    let d2 = d1.derivative();
    let square = f * f;
    let mixed = f * &d1;
    let laguerre = (f * &d2 - &d1 * &d1).shift_up(1);
    square.scale(a) + mixed.scale(b) + laguerre.scale(c)
}

/// `[D^d f, …, D f, f]` for `deg f = d`: element `i` has degree `i`.
///
/// With this indexing, `turan(&seq, d − 2)` is `f'² − f·f''`.
pub fn derivative_sequence(f: &ExactPoly) -> Result<Vec<ExactPoly>> {
    let d = f.degree().ok_or(Error::ZeroPolynomial("derivative_sequence"))?;
    let mut out = Vec::with_capacity(d + 1);
    let mut cur = f.clone();
    out.push(cur.clone());
    for _ in 0..d {
        cur = cur.derivative();
        out.push(cur.clone());
    }
    out.reverse();
    Ok(out)
}
