use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactPoly, Rational};

/// Dense polynomial over ℤ, used for remainder sequences and sign evaluation.
///
/// Only positive scalings are ever applied to an `IntPoly` that stands in for
/// a rational polynomial, so signs of values and leading coefficients carry
/// over unchanged.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Clears denominators by the positive lcm, then strips the positive content.
    pub fn primitive_from(p: &ExactPoly) -> Self {
        let lcm = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        IntPoly::new(coeffs).primitive()
    }

    pub fn to_exact(&self) -> ExactPoly {
        ExactPoly::new(self.coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Sign of the leading coefficient, `0` for the zero polynomial.
    pub fn leading_sign(&self) -> i8 {
        self.leading().map_or(0, sign_of)
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides by the positive content. Sign pattern is preserved.
    pub fn primitive(self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self;
        }
        IntPoly { coeffs: self.coeffs.into_iter().map(|c| c / &g).collect() }
    }

    pub fn neg(&self) -> Self {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn derivative(&self) -> Self {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Remainder of `λ·self` by `d`, where `λ = |lc(d)|^(deg self − deg d + 1) > 0`.
    ///
    /// This is the classical pseudo-remainder with the sign of the multiplier
    /// forced positive, so it equals `rem(self, d)` up to a positive factor.
    pub fn positive_pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let Some(dd) = d.degree() else {
            panic!("pseudo-remainder by zero polynomial");
        };
        let Some(nd) = self.degree() else {
            return IntPoly::new(Vec::new());
        };
        if nd < dd {
            return self.clone();
        }
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let steps = nd - dd + 1;
        for i in (0..steps).rev() {
            let top = rem[i + dd].clone();
            for c in rem.iter_mut().take(i + dd + 1) {
                *c *= lead;
            }
            if !top.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &top * dc;
                }
            }
        }
        rem.truncate(dd);
        // multiplier so far is lead^steps; fix its sign
        if lead.is_negative() && steps % 2 == 1 {
            for c in rem.iter_mut() {
                *c = -core::mem::take(c);
            }
        }
        IntPoly::new(rem)
    }

    /// Sign (−1, 0, 1) of the value at `num/den`, `den > 0`.
    pub fn sign_at(&self, num: &BigInt, den: &BigInt) -> i8 {
        // homogenized Horner: Σ a_i num^i den^(d-i), a positive multiple of p(num/den)
        let Some(d) = self.degree() else {
            return 0;
        };
        let mut acc = self.coeffs[d].clone();
        let mut den_pow = BigInt::one();
        for i in (0..d).rev() {
            den_pow *= den;
            acc = acc * num + &self.coeffs[i] * &den_pow;
        }
        sign_of(&acc)
    }

    pub fn sign_at_rational(&self, x: &Rational) -> i8 {
        self.sign_at(x.numer(), x.denom())
    }

    /// Sign as `x → +∞` (`positive = true`) or `x → −∞`.
    pub fn sign_at_infinity(&self, positive: bool) -> i8 {
        match (self.leading(), self.degree()) {
            (Some(lc), Some(d)) => {
                let s = sign_of(lc);
                if !positive && d % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
            _ => 0,
        }
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
