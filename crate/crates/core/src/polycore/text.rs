//! Comma-separated ascending coefficient text, e.g. `0,-8,-2,0,1`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{parse_rational, ExactPoly};
use crate::Error;

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            // BigRational prints `n` for integers and `n/d` otherwise
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for ExactPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s.trim().is_empty() {
            return Err(Error::Parse(String::from("empty polynomial text")));
        }
        let coeffs = s.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
        Ok(ExactPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn example_text() {
        let f: ExactPoly = "0,-8,-2,0,1".parse().unwrap();
        assert_eq!(f, ExactPoly::from_ints(&[0, -8, -2, 0, 1]));
        assert_eq!(f.to_string(), "0,-8,-2,0,1");
    }

    #[test]
    fn fractions_and_zero() {
        let f: ExactPoly = "1/2, -3/6,0".parse().unwrap();
        assert_eq!(f.to_string(), "1/2,-1/2");
        assert_eq!(ExactPoly::zero().to_string(), "0");
        assert!("0".parse::<ExactPoly>().unwrap().is_zero());
        assert!("1,,2".parse::<ExactPoly>().is_err());
        assert!("".parse::<ExactPoly>().is_err());
    }
}
