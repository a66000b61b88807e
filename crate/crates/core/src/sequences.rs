//! Named polynomial families and the abstract first-order recurrences.
//!
//! Three recurrence shapes drive the stability results:
//! - type A: `P_{k+1} = a(x+b)(D + c_k) P_k`,
//! - type H: `P_{k+1} = c(−a·x + b + D) P_k` (Hermite is `(a,b,c) = (2,0,−1)`),
//! - polar: `(xD − k) P_k = P_{k−1}`, or the scaled variant `(k − xD) P_k = k P_{k−1}`
//!   satisfied by Laguerre and Jensen polynomials.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::polycore::{binomial, factorial, int, ExactPoly, Rational};
use crate::{Error, Result};

/// A polynomial family, either named or given by a recurrence with parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceSpec {
    /// Univariate Bell (Touchard) polynomials, `B_{k+1} = x(B_k + D B_k)`.
    Bell,
    /// Physicists' Hermite polynomials, `H_k = (2x − D) H_{k−1}`.
    Hermite,
    ChebyshevT,
    ChebyshevU,
    /// `L_k(x) = Σ_j C(k,j) (−x)^j / j!`.
    Laguerre,
    Legendre,
    /// `Y_k(x) = Σ_j (k+j)! / (2^j j! (k−j)!) x^j`.
    Bessel,
    /// Jensen polynomials `g_n(x) = Σ_k C(n,k) γ_k x^k` of the sequence `γ`.
    Jensen { gamma: Vec<Rational> },
    /// Type A recurrence with the full list `c_0, c_1, …` and starting constant `p0`.
    TypeA { a: Rational, b: Rational, c: Vec<Rational>, p0: Rational },
    /// Type H recurrence with starting constant `p0`.
    TypeH { a: Rational, b: Rational, cscale: Rational, p0: Rational },
}

impl SequenceSpec {
    /// Bell polynomials seen as the type A recurrence `a = 1, b = 0, c ≡ 1`.
    pub fn bell_as_type_a(k_max: usize) -> Self {
        SequenceSpec::TypeA {
            a: Rational::one(),
            b: Rational::zero(),
            c: vec![Rational::one(); k_max],
            p0: Rational::one(),
        }
    }

    /// Hermite polynomials seen as the type H recurrence `(2, 0, −1)`.
    pub fn hermite_as_type_h() -> Self {
        SequenceSpec::TypeH { a: int(2), b: Rational::zero(), cscale: int(-1), p0: Rational::one() }
    }

    /// Lowercase label used in reports and on the command line.
    pub fn label(&self) -> &'static str {
        match self {
            SequenceSpec::Bell => "bell",
            SequenceSpec::Hermite => "hermite",
            SequenceSpec::ChebyshevT => "chebyshev-t",
            SequenceSpec::ChebyshevU => "chebyshev-u",
            SequenceSpec::Laguerre => "laguerre",
            SequenceSpec::Legendre => "legendre",
            SequenceSpec::Bessel => "bessel",
            SequenceSpec::Jensen { .. } => "jensen",
            SequenceSpec::TypeA { .. } => "type-a",
            SequenceSpec::TypeH { .. } => "type-h",
        }
    }

    /// Checks the family's parameter hypotheses.
    pub fn validate(&self) -> Result<()> {
        match self {
            SequenceSpec::TypeA { a, b, c, p0 } => {
                if a.is_zero() {
                    return Err(invalid("type A needs a ≠ 0"));
                }
                if b.is_negative() {
                    return Err(invalid("type A needs b ≥ 0"));
                }
                if p0.is_zero() {
                    return Err(invalid("P_0 must be a nonzero constant"));
                }
                if let Some(first) = c.first() {
                    if !first.is_positive() {
                        return Err(invalid("type A needs c_0 > 0"));
                    }
                }
                if c.windows(2).any(|w| w[1] < w[0]) {
                    return Err(invalid("type A needs c non-decreasing"));
                }
                Ok(())
            }
            SequenceSpec::TypeH { a, cscale, p0, .. } => {
                if !a.is_positive() {
                    return Err(invalid("type H needs a > 0"));
                }
                if cscale.is_zero() {
                    return Err(invalid("type H needs c ≠ 0"));
                }
                if p0.is_zero() {
                    return Err(invalid("P_0 must be a nonzero constant"));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

fn invalid(msg: &str) -> Error {
    Error::InvalidSpec(String::from(msg))
}

/// `P_0, …, P_{k_max}` for the family.
pub fn generate(spec: &SequenceSpec, k_max: usize) -> Result<Vec<ExactPoly>> {
    spec.validate()?;
    let seq = match spec {
        SequenceSpec::Bell => {
            let one = Rational::one();
            iterate(ExactPoly::one(), k_max, |p, _| {
                apply_type_a(p, &one, &Rational::zero(), &one)
            })?
        }
        SequenceSpec::Hermite => iterate(ExactPoly::one(), k_max, |p, _| {
            apply_type_h(p, &int(2), &Rational::zero(), &int(-1))
        })?,
        SequenceSpec::ChebyshevT => three_term(k_max, ExactPoly::x(), |_| int(2), |_| int(1)),
        SequenceSpec::ChebyshevU => {
            three_term(k_max, ExactPoly::from_ints(&[0, 2]), |_| int(2), |_| int(1))
        }
        SequenceSpec::Legendre => {
            // (k+1) P_{k+1} = (2k+1) x P_k − k P_{k−1}
            let k1 = |k: usize| Rational::from_integer(BigInt::from(k + 1));
            three_term(
                k_max,
                ExactPoly::x(),
                |k| Rational::from_integer(BigInt::from(2 * k + 1)) / k1(k),
                |k| Rational::from_integer(BigInt::from(k)) / k1(k),
            )
        }
        SequenceSpec::Laguerre => (0..=k_max).map(laguerre).collect(),
        SequenceSpec::Bessel => (0..=k_max).map(bessel).collect(),
        SequenceSpec::Jensen { gamma } => {
            if gamma.len() <= k_max {
                return Err(Error::SequenceTooShort { needed: k_max, available: gamma.len() });
            }
            (0..=k_max).map(|n| jensen(&gamma[..=n])).collect()
        }
        SequenceSpec::TypeA { a, b, c, p0 } => {
            if c.len() < k_max {
                return Err(Error::InvalidSpec(format!(
                    "type A needs c_0..c_{} ({} values), got {}",
                    k_max.saturating_sub(1),
                    k_max,
                    c.len()
                )));
            }
            iterate(ExactPoly::constant(p0.clone()), k_max, |p, k| apply_type_a(p, a, b, &c[k]))?
        }
        SequenceSpec::TypeH { a, b, cscale, p0 } => {
            iterate(ExactPoly::constant(p0.clone()), k_max, |p, _| apply_type_h(p, a, b, cscale))?
        }
    };
    Ok(seq)
}

fn iterate(
    p0: ExactPoly,
    k_max: usize,
    mut step: impl FnMut(&ExactPoly, usize) -> Result<ExactPoly>,
) -> Result<Vec<ExactPoly>> {
    let mut out = Vec::with_capacity(k_max + 1);
    out.push(p0);
    for k in 0..k_max {
        let next = step(&out[k], k)?;
        out.push(next);
    }
    Ok(out)
}

/// `P_0 = 1`, `P_1` given, `P_{k+1} = α_k x P_k − β_k P_{k−1}`.
fn three_term(
    k_max: usize,
    p1: ExactPoly,
    alpha: impl Fn(usize) -> Rational,
    beta: impl Fn(usize) -> Rational,
) -> Vec<ExactPoly> {
    let mut out = vec![ExactPoly::one()];
    if k_max >= 1 {
        out.push(p1);
    }
    for k in 1..k_max {
        let next = out[k].shift_up(1).scale(&alpha(k)) - out[k - 1].scale(&beta(k));
        out.push(next);
    }
    out
}

fn laguerre(k: usize) -> ExactPoly {
    let coeffs = (0..=k)
        .map(|j| {
            let c = Rational::new(binomial(k, j), factorial(j));
            if j % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    ExactPoly::new(coeffs)
}

fn bessel(k: usize) -> ExactPoly {
    let coeffs = (0..=k)
        .map(|j| {
            let den = (BigInt::one() << j) * factorial(j) * factorial(k - j);
            Rational::from_integer(factorial(k + j) / den)
        })
        .collect();
    ExactPoly::new(coeffs)
}

fn jensen(gamma: &[Rational]) -> ExactPoly {
    let n = gamma.len() - 1;
    let coeffs = gamma
        .iter()
        .enumerate()
        .map(|(k, g)| g * Rational::from_integer(binomial(n, k)))
        .collect();
    ExactPoly::new(coeffs)
}

/// One type A step: `a(x+b)(p' + c·p)`.
pub fn apply_type_a(p: &ExactPoly, a: &Rational, b: &Rational, c: &Rational) -> Result<ExactPoly> {
    if a.is_zero() {
        return Err(invalid("type A step needs a ≠ 0"));
    }
    let inner = p.derivative() + p.scale(c);
    let linear = ExactPoly::new(vec![a * b, a.clone()]);
    Ok(&linear * &inner)
}

/// One type H step: `c(−a·x·p + b·p + p')`.
pub fn apply_type_h(p: &ExactPoly, a: &Rational, b: &Rational, c: &Rational) -> Result<ExactPoly> {
    if !a.is_positive() {
        return Err(invalid("type H step needs a > 0"));
    }
    if c.is_zero() {
        return Err(invalid("type H step needs c ≠ 0"));
    }
    let inner = p.shift_up(1).scale(&-a) + p.scale(b) + p.derivative();
    Ok(inner.scale(c))
}

/// `(xD − k) p = x·p' − k·p` for `deg p = k`; the `x^k` term cancels.
pub fn apply_polar_down(p: &ExactPoly, k: usize) -> Result<ExactPoly> {
    if k == 0 {
        return Err(Error::Precondition(String::from("polar step needs k ≥ 1")));
    }
    if p.degree() != Some(k) {
        return Err(Error::Precondition(format!(
            "polar step at k = {k} needs deg p = {k}, got {:?}",
            p.degree()
        )));
    }
    Ok(p.derivative().shift_up(1) - p.scale(&Rational::from_integer(BigInt::from(k))))
}

/// Which downward relation to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `(xD − k) P_k = P_{k−1}`.
    PolarUnit,
    /// `(k − xD) P_k = k P_{k−1}`.
    PolarScaled,
}

/// True iff the relation holds exactly for every `k ≥ 1` in the sequence.
pub fn verify_relation(seq: &[ExactPoly], relation: Relation) -> bool {
    (1..seq.len()).all(|k| {
        let p = &seq[k];
        let kq = Rational::from_integer(BigInt::from(k));
        let polar = p.derivative().shift_up(1) - p.scale(&kq);
        match relation {
            Relation::PolarUnit => polar == seq[k - 1],
            Relation::PolarScaled => polar.neg() == seq[k - 1].scale(&kq),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;

    fn p(c: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(c)
    }

    #[test]
    fn bell_first_terms() {
        let seq = generate(&SequenceSpec::Bell, 4).unwrap();
        assert_eq!(
            seq,
            [p(&[1]), p(&[0, 1]), p(&[0, 1, 1]), p(&[0, 1, 3, 1]), p(&[0, 1, 7, 6, 1])]
        );
        assert_eq!(generate(&SequenceSpec::bell_as_type_a(4), 4).unwrap(), seq);
    }

    #[test]
    fn hermite_first_terms() {
        let seq = generate(&SequenceSpec::Hermite, 3).unwrap();
        assert_eq!(seq, [p(&[1]), p(&[0, 2]), p(&[-2, 0, 4]), p(&[0, -12, 0, 8])]);
        assert_eq!(generate(&SequenceSpec::hermite_as_type_h(), 3).unwrap(), seq);
    }

    #[test]
    fn chebyshev_first_terms() {
        let t = generate(&SequenceSpec::ChebyshevT, 3).unwrap();
        assert_eq!(t, [p(&[1]), p(&[0, 1]), p(&[-1, 0, 2]), p(&[0, -3, 0, 4])]);
        let u = generate(&SequenceSpec::ChebyshevU, 3).unwrap();
        assert_eq!(u, [p(&[1]), p(&[0, 2]), p(&[-1, 0, 4]), p(&[0, -4, 0, 8])]);
        assert_eq!(generate(&SequenceSpec::ChebyshevT, 0).unwrap(), [p(&[1])]);
    }

    #[test]
    fn legendre_first_terms() {
        let seq = generate(&SequenceSpec::Legendre, 3).unwrap();
        assert_eq!(seq[2], ExactPoly::new(vec![rat(-1, 2), rat(0, 1), rat(3, 2)]));
        assert_eq!(seq[3], ExactPoly::new(vec![rat(0, 1), rat(-3, 2), rat(0, 1), rat(5, 2)]));
    }

    #[test]
    fn bessel_and_laguerre_first_terms() {
        let y = generate(&SequenceSpec::Bessel, 2).unwrap();
        assert_eq!(y, [p(&[1]), p(&[1, 1]), p(&[1, 3, 3])]);
        let l = generate(&SequenceSpec::Laguerre, 2).unwrap();
        assert_eq!(l[1], p(&[1, -1]));
        assert_eq!(l[2], ExactPoly::new(vec![rat(1, 1), rat(-2, 1), rat(1, 2)]));
    }

    #[test]
    fn jensen_constant_gamma_is_binomial() {
        let spec = SequenceSpec::Jensen { gamma: vec![Rational::one(); 3] };
        let seq = generate(&spec, 2).unwrap();
        assert_eq!(seq, [p(&[1]), p(&[1, 1]), p(&[1, 2, 1])]);
        assert!(matches!(generate(&spec, 3), Err(Error::SequenceTooShort { .. })));
    }

    #[test]
    fn jensen_degree_drops_with_vanishing_gamma() {
        let spec = SequenceSpec::Jensen { gamma: vec![int(1), int(2), int(0)] };
        let seq = generate(&spec, 2).unwrap();
        assert_eq!(seq[2].degree(), Some(1));
    }

    #[test]
    fn type_a_steps() {
        let one = Rational::one();
        let zero = Rational::zero();
        assert_eq!(apply_type_a(&p(&[1]), &one, &zero, &one).unwrap(), p(&[0, 1]));
        assert_eq!(apply_type_a(&p(&[0, 1]), &one, &zero, &one).unwrap(), p(&[0, 1, 1]));
        assert_eq!(apply_type_a(&p(&[1]), &int(2), &int(1), &int(3)).unwrap(), p(&[6, 6]));
        assert!(apply_type_a(&p(&[1]), &zero, &zero, &one).is_err());
    }

    #[test]
    fn type_h_steps() {
        let (two, zero, m1) = (int(2), Rational::zero(), int(-1));
        assert_eq!(apply_type_h(&p(&[1]), &two, &zero, &m1).unwrap(), p(&[0, 2]));
        assert_eq!(apply_type_h(&p(&[0, 2]), &two, &zero, &m1).unwrap(), p(&[-2, 0, 4]));
        let one = Rational::one();
        assert_eq!(apply_type_h(&p(&[1]), &one, &one, &one).unwrap(), p(&[1, -1]));
        assert!(apply_type_h(&p(&[1]), &zero, &one, &one).is_err());
        assert!(apply_type_h(&p(&[1]), &one, &one, &zero).is_err());
    }

    #[test]
    fn polar_down_steps() {
        assert_eq!(apply_polar_down(&p(&[0, 0, 1]), 2).unwrap(), ExactPoly::zero());
        assert_eq!(apply_polar_down(&p(&[1, 2, 1]), 2).unwrap(), p(&[-2, -2]));
        assert_eq!(apply_polar_down(&p(&[1, 1]), 1).unwrap(), p(&[-1]));
        assert!(apply_polar_down(&p(&[1, 1]), 2).is_err());
        assert!(apply_polar_down(&p(&[1]), 0).is_err());
    }

    #[test]
    fn relations() {
        let lag = generate(&SequenceSpec::Laguerre, 6).unwrap();
        assert!(verify_relation(&lag, Relation::PolarScaled));
        let jen = generate(&SequenceSpec::Jensen { gamma: vec![Rational::one(); 7] }, 6).unwrap();
        assert!(verify_relation(&jen, Relation::PolarScaled));
        let bell = generate(&SequenceSpec::Bell, 4).unwrap();
        assert!(!verify_relation(&bell, Relation::PolarUnit));
        assert!(!verify_relation(&bell, Relation::PolarScaled));
    }

    #[test]
    fn spec_validation() {
        let bad_c = SequenceSpec::TypeA {
            a: int(1),
            b: int(0),
            c: vec![int(2), int(1)],
            p0: int(1),
        };
        assert!(generate(&bad_c, 2).is_err());
        let neg_b = SequenceSpec::TypeA { a: int(1), b: int(-1), c: vec![int(1)], p0: int(1) };
        assert!(generate(&neg_b, 1).is_err());
        let short = SequenceSpec::bell_as_type_a(2);
        assert!(generate(&short, 3).is_err());
        let bad_h = SequenceSpec::TypeH { a: int(0), b: int(0), cscale: int(1), p0: int(1) };
        assert!(generate(&bad_h, 1).is_err());
        let zero_seed = SequenceSpec::TypeH { a: int(1), b: int(0), cscale: int(1), p0: int(0) };
        assert!(generate(&zero_seed, 1).is_err());
    }

    #[test]
    fn degree_contract() {
        let families = [
            SequenceSpec::Bell,
            SequenceSpec::Hermite,
            SequenceSpec::ChebyshevT,
            SequenceSpec::ChebyshevU,
            SequenceSpec::Laguerre,
            SequenceSpec::Legendre,
            SequenceSpec::Bessel,
        ];
        for fam in &families {
            for (k, pk) in generate(fam, 12).unwrap().iter().enumerate() {
                assert_eq!(pk.degree(), Some(k), "{} k={k}", fam.label());
            }
        }
    }

    #[test]
    fn hermite_parity() {
        for (k, h) in generate(&SequenceSpec::Hermite, 20).unwrap().iter().enumerate() {
            let expected = if k % 2 == 0 { h.clone() } else { h.neg() };
            assert_eq!(h.reflect(), expected);
        }
    }
}
