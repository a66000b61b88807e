use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{binomial, Rational};
use crate::{Error, Result};

/// Dense univariate polynomial over ℚ, coefficients in ascending degree.
///
/// The representation is canonical: no trailing zero coefficient, and the
/// zero polynomial is the empty list, so derived equality is mathematical
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExactPoly {
    coeffs: Vec<Rational>,
}

impl ExactPoly {
    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        ExactPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The monic polynomial with the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            &acc * &Self::new(vec![-r.clone(), Rational::one()])
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        ExactPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ExactPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ExactPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal derivative `D p`.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect();
        Self::new(coeffs)
    }

    /// `D^k p`.
    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    /// `p(a·x + b)`, expanded by binomial sums.
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> Self {
        let n = self.coeffs.len();
        if n == 0 {
            return Self::zero();
        }
        let a_pows = powers(a, n);
        let b_pows = powers(b, n);
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // c·(a x + b)^i = c·Σ_j C(i,j) a^j b^(i-j) x^j
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                let binom = Rational::from_integer(binomial(i, j));
                *slot += c * binom * &a_pows[j] * &b_pows[i - j];
            }
        }
        Self::new(out)
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        ExactPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Euclidean division over ℚ: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let q = top * &lead_inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Division that must be exact.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::NotDivisible);
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_rem(self).is_ok_and(|(_, r)| r.is_zero())
    }

    /// Scales to leading coefficient 1.
    pub fn monic(&self) -> Result<Self> {
        let lead = self.leading_coeff().ok_or(Error::ZeroPolynomial("monic"))?;
        Ok(self.scale(&lead.recip()))
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Sign of the leading coefficient: `1`, `-1`, or `0` for the zero polynomial.
    pub fn leading_sign(&self) -> i8 {
        match self.leading_coeff() {
            None => 0,
            Some(c) if c.is_positive() => 1,
            Some(_) => -1,
        }
    }
}

fn powers(base: &Rational, n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n);
    let mut acc = Rational::one();
    for _ in 0..n {
        out.push(acc.clone());
        acc *= base;
    }
    out
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&ExactPoly> for &ExactPoly {
            type Output = ExactPoly;
            fn $method(self, rhs: &ExactPoly) -> ExactPoly {
                ExactPoly::$method(self, rhs)
            }
        }
        impl $trait for ExactPoly {
            type Output = ExactPoly;
            fn $method(self, rhs: ExactPoly) -> ExactPoly {
                ExactPoly::$method(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly::neg(self)
    }
}

impl Neg for ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{int, rat};

    fn p(c: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(c)
    }

    #[test]
    fn ring_ops() {
        assert_eq!(p(&[0, 1]) + p(&[1]), p(&[1, 1]));
        assert_eq!(p(&[0, 1]) * p(&[2, 1]), p(&[0, 2, 1]));
        assert_eq!(p(&[0, 2, 1]).scale(&int(-1)), p(&[0, -2, -1]));
        assert_eq!(p(&[1, 1]) - p(&[1, 1]), ExactPoly::zero());
        assert!(ExactPoly::zero().coeffs().is_empty());
        assert_eq!(ExactPoly::zero().degree(), None);
        assert_eq!(ExactPoly::new(vec![int(3), int(0), int(0)]).degree(), Some(0));
    }

    #[test]
    fn derivative_cases() {
        assert_eq!(p(&[0, 1, 1]).derivative(), p(&[1, 2]));
        assert_eq!(p(&[7]).derivative(), ExactPoly::zero());
        assert_eq!(p(&[0, 1, 3, 1]).derivative(), p(&[1, 6, 3]));
    }

    #[test]
    fn compose_linear_cases() {
        assert_eq!(p(&[-1, 0, 1]).compose_linear(&int(1), &int(1)), p(&[0, 2, 1]));
        assert_eq!(p(&[0, 1]).compose_linear(&int(-1), &int(0)), p(&[0, -1]));
        // 1 - (x-1)^2 = 2x - x^2
        assert_eq!(p(&[1, 0, -1]).compose_linear(&int(1), &int(-1)), p(&[0, 2, -1]));
        assert_eq!(p(&[1, 2, 3]).reflect(), p(&[1, 2, 3]).compose_linear(&int(-1), &int(0)));
    }

    #[test]
    fn eval_cases() {
        let f = p(&[1, 0, -1]);
        assert_eq!(f.eval(&int(1)), int(0));
        assert_eq!(f.eval(&rat(1, 2)), rat(3, 4));
        assert_eq!(p(&[0, 1, 1]).eval(&int(-1)), int(0));
    }

    #[test]
    fn division() {
        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[0, 2])).unwrap();
        assert_eq!(q, ExactPoly::new(vec![int(0), rat(1, 2)]));
        assert_eq!(r, p(&[1]));
        assert_eq!(p(&[1]).div_rem(&ExactPoly::zero()), Err(Error::DivisionByZero));
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[0, 1])), Err(Error::NotDivisible));
    }

    #[test]
    fn pow_and_roots() {
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[5]).pow(0), p(&[1]));
        assert_eq!(ExactPoly::from_roots(&[int(1), int(-1)]), p(&[-1, 0, 1]));
    }
}
