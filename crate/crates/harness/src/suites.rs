//! Verification suites. Each returns `Ok(true)` when every check holds.

use anyhow::{bail, Result};
use hurwitz_core::polycore::{factorial, int, pow2, rat, ExactPoly, Rational};
use hurwitz_core::sequences::{generate, verify_relation, Relation};
use hurwitz_core::stability::{
    all_roots_real, coeff_sign_precheck, is_weakly_hurwitz, isolate_extreme_roots, nonvanishing_halfplane,
    sturm_real_count, Bound, SignPrecheck, Side,
};
use hurwitz_core::turan::{extended_turan, fisk_expression, transform, turan, wronskian};
use hurwitz_core::SequenceSpec;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SUITE_NAMES: &[&str] = &["fisk", "cheby", "thm12", "legendre", "wronskian", "jensen"];

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

fn stable(f: &ExactPoly) -> Result<bool> {
    Ok(is_weakly_hurwitz(f)?.verdict)
}

/// The four-term expression of `x(x+2)` with `a = b = 1, c = 3` is `x⁴ − 2x² − 8x`, which is unstable.
pub fn verify_fisk_counterexample() -> Result<bool> {
    let f = ExactPoly::from_ints(&[0, 2, 1]);
    let one = Rational::one();
    let expr = fisk_expression(&f, &one, &one, &int(3));
    let exact = expr == ExactPoly::from_ints(&[0, -8, -2, 0, 1]);
    let unstable = !stable(&expr)?;
    let precheck = coeff_sign_precheck(&expr) == SignPrecheck::CertainlyUnstable;

    // with a negative c the same f gives a stable expression
    let negative_c = stable(&fisk_expression(&f, &one, &one, &int(-3)))?;
    // f = 1 leaves only the constant a
    let constant = fisk_expression(&ExactPoly::one(), &one, &one, &int(3));
    let degenerate = constant == ExactPoly::one() && stable(&constant)?;
    Ok(exact && unstable && precheck && negative_c && degenerate)
}

/// Extended Turán expressions of Chebyshev polynomials against their closed forms.
pub fn verify_chebyshev_closed_forms(k_max: usize, n_max: usize) -> Result<bool> {
    if k_max < 1 || n_max < 1 {
        bail!("k_max and n_max must be at least 1");
    }
    let len = k_max + 2 * n_max;
    let t = generate(&SequenceSpec::ChebyshevT, len)?;
    let u = generate(&SequenceSpec::ChebyshevU, len)?;
    let base = ExactPoly::from_ints(&[1, 0, -1]);
    for n in 1..=n_max {
        let c = pow2(2 * n as i32 - 1) / Rational::from_integer(factorial(2 * n));
        let first = base.pow(n as u32).scale(&c);
        let second = base.pow(n as u32 - 1).scale(&c);
        for k in 0..=k_max {
            if extended_turan(&t, k, n)? != first || extended_turan(&u, k, n)? != second {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Type A: stability of `𝒯_k(x − b)`. Type H: no zeros beyond the extreme
/// zeros of `P_{k+1}`, checked at outer bracket endpoints of width `2⁻²⁰`.
pub fn verify_theorem_1_2(spec: &SequenceSpec, k_max: usize) -> Result<bool> {
    let spec = match spec {
        SequenceSpec::Bell => SequenceSpec::bell_as_type_a(k_max + 2),
        SequenceSpec::Hermite => SequenceSpec::hermite_as_type_h(),
        s @ (SequenceSpec::TypeA { .. } | SequenceSpec::TypeH { .. }) => s.clone(),
        other => {
            let seq = generate(other, k_max + 2)?;
            return verify_theorem_1_2_polar(&seq);
        }
    };
    spec.validate()?;
    let seq = generate(&spec, k_max + 2)?;
    match &spec {
        SequenceSpec::TypeA { b, .. } => {
            for k in 0..=k_max {
                let shifted = transform(&turan(&seq, k)?, false, &-b.clone());
                if !stable(&shifted)? {
                    return Ok(false);
                }
            }
        }
        SequenceSpec::TypeH { .. } => {
            let tol = pow2(-20);
            for k in 0..=k_max {
                let t = turan(&seq, k)?;
                let r = isolate_extreme_roots(&seq[k + 1], &tol)?;
                if &r.max_hi - &r.max_lo > tol || &r.min_hi - &r.min_lo > tol {
                    return Ok(false);
                }
                if !nonvanishing_halfplane(&t, &r.max_hi, Side::RightOf)?
                    || !nonvanishing_halfplane(&t, &r.min_lo, Side::LeftOf)?
                {
                    return Ok(false);
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(true)
}

/// For a sequence with `(xD − k) P_k = P_{k−1}` and only non-positive zeros,
/// every `𝒯_k` is weakly stable.
pub fn verify_theorem_1_2_polar(seq: &[ExactPoly]) -> Result<bool> {
    if !verify_relation(seq, Relation::PolarUnit) {
        bail!("sequence does not satisfy (xD − k)P_k = P_(k−1)");
    }
    for p in seq.iter().filter(|p| !p.is_constant()) {
        let positive = sturm_real_count(p, &Bound::At(Rational::zero()), &Bound::PosInf)?;
        if !all_roots_real(p)? || positive > 0 {
            bail!("sequence has a zero that is not real and non-positive");
        }
    }
    for k in 0..seq.len().saturating_sub(2) {
        if !stable(&turan(seq, k)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `P_k = (−1)^k L_k(−x) / k!`, the normalization of Laguerre polynomials with `(xD − k)P_k = P_{k−1}`.
pub fn polar_laguerre(k_max: usize) -> Result<Vec<ExactPoly>> {
    let lag = generate(&SequenceSpec::Laguerre, k_max)?;
    Ok(lag
        .iter()
        .enumerate()
        .map(|(k, l)| {
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            l.reflect().scale(&(sign / Rational::from_integer(factorial(k))))
        })
        .collect())
}

/// `𝒯_k(Legendre)` on the grid `j/50`: positive inside, zero exactly at `±1`.
pub fn verify_legendre_turan(k_max: usize) -> Result<bool> {
    if k_max < 1 {
        bail!("k_max must be at least 1");
    }
    let leg = generate(&SequenceSpec::Legendre, k_max + 2)?;
    for k in 0..=k_max {
        let t = turan(&leg, k)?;
        for j in -50..=50i64 {
            let v = t.eval(&rat(j, 50));
            let ok = if j.abs() == 50 { v.is_zero() } else { v.is_positive() };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Wronskians of random polynomials with all zeros in `[−1, 1]` vanish only in the strip `|Re x| ≤ 1`.
pub fn verify_wronskian_strip(samples: usize, seed: u64) -> Result<bool> {
    let one = Rational::one();
    let check = |p: &ExactPoly| -> Result<bool> {
        let w = wronskian(p)?;
        Ok(nonvanishing_halfplane(&w, &one, Side::RightOf)?
            && nonvanishing_halfplane(&w, &-one.clone(), Side::LeftOf)?)
    };
    if wronskian(&ExactPoly::from_ints(&[-1, 0, 1]))? != ExactPoly::from_ints(&[2, 0, 2]) {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let deg = rng.random_range(1..=10);
        let roots: Vec<Rational> = (0..deg)
            .map(|_| {
                let d = rng.random_range(1..=16i64);
                rat(rng.random_range(-d..=d), d)
            })
            .collect();
        if !check(&ExactPoly::from_roots(&roots))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(k − xD)P_k = kP_{k−1}` for Laguerre and random Jensen sequences, plus
/// stability of `𝒯_k(Laguerre; −x)` for `k ≤ min(k_max, 50)`.
pub fn verify_jensen_laguerre_relations(k_max: usize, seed: u64) -> Result<bool> {
    if k_max < 1 {
        bail!("k_max must be at least 1");
    }
    if !verify_relation(&generate(&SequenceSpec::Laguerre, k_max)?, Relation::PolarScaled) {
        return Ok(false);
    }
    let ones = SequenceSpec::Jensen { gamma: vec![int(1); k_max + 1] };
    let seq = generate(&ones, k_max)?;
    let binomial_ok = seq.iter().enumerate().all(|(k, p)| *p == ExactPoly::from_ints(&[1, 1]).pow(k as u32));
    if !binomial_ok || !verify_relation(&seq, Relation::PolarScaled) {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..5 {
        let gamma = (0..=k_max).map(|_| rat(rng.random_range(1..=50), rng.random_range(1..=9))).collect();
        if !verify_relation(&generate(&SequenceSpec::Jensen { gamma }, k_max)?, Relation::PolarScaled) {
            return Ok(false);
        }
    }
    let top = k_max.min(50);
    let lag = generate(&SequenceSpec::Laguerre, top + 2)?;
    for k in 0..=top {
        if !stable(&turan(&lag, k)?.reflect())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One observation of the open Jensen-sequence question; recorded, never asserted.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ProbeRow {
    pub gamma: &'static str,
    pub k: usize,
    pub stable: bool,
}

/// `𝒯_k` of Jensen sequences whose members have only non-positive zeros.
pub fn jensen_probe(k_max: usize) -> Result<Vec<ProbeRow>> {
    let families: [(&'static str, Vec<Rational>); 2] = [
        ("k+1", (0..=k_max + 2).map(|k| int(k as i64 + 1)).collect()),
        ("1/k!", (0..=k_max + 2).map(|k| Rational::one() / Rational::from_integer(factorial(k))).collect()),
    ];
    let mut rows = Vec::new();
    for (label, gamma) in families {
        let seq = generate(&SequenceSpec::Jensen { gamma }, k_max + 2)?;
        for k in 0..=k_max {
            rows.push(ProbeRow { gamma: label, k, stable: stable(&turan(&seq, k)?)? });
        }
    }
    Ok(rows)
}

/// Outcome of one named suite as printed by `verify`.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub notes: Vec<String>,
}

pub fn run_suite(name: &str, seed: u64) -> Result<SuiteOutcome> {
    let mut notes = Vec::new();
    let (name, passed) = match name {
        "fisk" => ("fisk", verify_fisk_counterexample()?),
        "cheby" => ("cheby", verify_chebyshev_closed_forms(20, 6)?),
        "thm12" => {
            let bell = verify_theorem_1_2(&SequenceSpec::Bell, 25)?;
            let hermite = verify_theorem_1_2(&SequenceSpec::Hermite, 12)?;
            let h = generate(&SequenceSpec::Hermite, 3)?;
            let t1 = turan(&h, 1)?;
            let t1_ok = t1 == ExactPoly::from_ints(&[4, 0, 8])
                && sturm_real_count(&t1, &Bound::NegInf, &Bound::PosInf)? == 0;
            let polar = verify_theorem_1_2_polar(&polar_laguerre(22)?)?;
            notes.push(format!("bell={bell} hermite={hermite} hermite_t1={t1_ok} polar={polar}"));
            ("thm12", bell && hermite && t1_ok && polar)
        }
        "legendre" => ("legendre", verify_legendre_turan(20)?),
        "wronskian" => ("wronskian", verify_wronskian_strip(100, seed)?),
        "jensen" => {
            let ok = verify_jensen_laguerre_relations(25, seed)?;
            for row in jensen_probe(10)? {
                notes.push(format!("probe gamma={} k={} stable={}", row.gamma, row.k, row.stable));
            }
            ("jensen", ok)
        }
        other => bail!("unknown suite {other:?}; expected one of {} or all", SUITE_NAMES.join(", ")),
    };
    Ok(SuiteOutcome { name, passed, notes })
}
