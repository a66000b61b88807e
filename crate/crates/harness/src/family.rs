//! Command-line family names and parameters.

use anyhow::{bail, Context, Result};
use hurwitz_core::polycore::{parse_rational, Rational};
use hurwitz_core::SequenceSpec;
use num_traits::One;

pub const FAMILY_NAMES: &[&str] = &[
    "bell",
    "hermite",
    "chebyshev-t",
    "chebyshev-u",
    "laguerre",
    "legendre",
    "bessel",
    "jensen",
    "type-a",
    "type-h",
];

pub fn parse_csv(s: &str) -> Result<Vec<Rational>> {
    s.split(',')
        .map(|t| parse_rational(t.trim()).with_context(|| format!("bad rational {t:?}")))
        .collect()
}

/// Builds a spec from a name plus the optional `--gamma`, `--params`, `--p0` values.
///
/// `type-a` takes `a,b,c_0,c_1,…`; `type-h` takes `a,b,c`.
pub fn parse_family(
    name: &str,
    gamma: Option<&str>,
    params: Option<&str>,
    p0: Option<&str>,
) -> Result<SequenceSpec> {
    let p0 = match p0 {
        Some(s) => parse_rational(s).with_context(|| format!("bad --p0 {s:?}"))?,
        None => Rational::one(),
    };
    let params = params.map(parse_csv).transpose()?;
    let spec = match name {
        "bell" => SequenceSpec::Bell,
        "hermite" => SequenceSpec::Hermite,
        "chebyshev-t" | "cheby-t" => SequenceSpec::ChebyshevT,
        "chebyshev-u" | "cheby-u" => SequenceSpec::ChebyshevU,
        "laguerre" => SequenceSpec::Laguerre,
        "legendre" => SequenceSpec::Legendre,
        "bessel" => SequenceSpec::Bessel,
        "jensen" => {
            let Some(g) = gamma else { bail!("jensen needs --gamma") };
            SequenceSpec::Jensen { gamma: parse_csv(g)? }
        }
        "type-a" => {
            let Some(mut v) = params else { bail!("type-a needs --params a,b,c0,c1,...") };
            if v.len() < 2 {
                bail!("type-a needs at least a,b");
            }
            let c = v.split_off(2);
            let b = v.pop().unwrap();
            let a = v.pop().unwrap();
            SequenceSpec::TypeA { a, b, c, p0 }
        }
        "type-h" => {
            let Some(v) = params else { bail!("type-h needs --params a,b,c") };
            let [a, b, cscale]: [Rational; 3] =
                v.try_into().map_err(|_| anyhow::anyhow!("type-h needs exactly a,b,c"))?;
            SequenceSpec::TypeH { a, b, cscale, p0 }
        }
        other => bail!("unknown family {other:?}; expected one of {}", FAMILY_NAMES.join(", ")),
    };
    spec.validate()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hurwitz_core::polycore::int;

    #[test]
    fn parses_named_and_parametric_families() {
        assert_eq!(parse_family("bell", None, None, None).unwrap(), SequenceSpec::Bell);
        let a = parse_family("type-a", None, Some("1,0,1,1,1"), None).unwrap();
        assert_eq!(a, SequenceSpec::bell_as_type_a(3));
        let h = parse_family("type-h", None, Some("2,0,-1"), None).unwrap();
        assert_eq!(h, SequenceSpec::hermite_as_type_h());
        let j = parse_family("jensen", Some("1, 1/2"), None, None).unwrap();
        assert_eq!(j, SequenceSpec::Jensen { gamma: vec![int(1), Rational::new(1.into(), 2.into())] });
        assert!(parse_family("jensen", None, None, None).is_err());
        assert!(parse_family("type-a", None, Some("1,-1,1"), None).is_err());
        assert!(parse_family("nope", None, None, None).is_err());
    }
}
