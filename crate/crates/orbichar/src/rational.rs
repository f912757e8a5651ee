//! Exact arbitrary-precision rational arithmetic, backed by `num-rational`.

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Exact rational number; denominators are always positive and fractions
/// are kept reduced.
pub type Rational = num_rational::BigRational;

/// Convenience constructor from machine integers.
pub fn ratio(numerator: i64, denominator: i64) -> Rational {
    Rational::new(BigInt::from(numerator), BigInt::from(denominator))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"a/b"` or `"a"` with optional sign.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::InvalidInput(format!("cannot parse rational `{text}`"));
    match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
        None => {
            let num: BigInt = text.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(num))
        }
    }
}

/// Exact power with a possibly negative exponent.
pub fn pow_i64(base: u64, exp: i64) -> Rational {
    let positive = Rational::from_integer(BigInt::from(base)).pow(exp.unsigned_abs() as i32);
    if exp >= 0 {
        positive
    } else {
        positive.recip()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("-1/12").unwrap(), ratio(-1, 12));
        assert_eq!(parse_rational("30").unwrap(), integer(30));
        assert_eq!(parse_rational(" 1 / 30 ").unwrap(), ratio(1, 30));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn fractions_stay_reduced() {
        let half = ratio(2, 4);
        assert_eq!(half, ratio(1, 2));
        assert_eq!(half.denom(), &BigInt::from(2));
        // Negative denominators normalize.
        assert_eq!(ratio(1, -2), ratio(-1, 2));
    }

    #[test]
    fn negative_powers_invert() {
        assert_eq!(pow_i64(3, 2), integer(9));
        assert_eq!(pow_i64(3, -1), ratio(1, 3));
        assert_eq!(pow_i64(5, 0), integer(1));
    }
}
