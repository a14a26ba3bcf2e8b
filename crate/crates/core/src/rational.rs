//! Exact rational scalars and their textual forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed fraction, always kept in lowest terms.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p/q`, an integer, or a decimal literal such as `-1.25` or `3e-2`.
///
/// Decimals are converted exactly; no binary floating point is involved.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::InvalidRational(text.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = parse_int(num.trim()).ok_or_else(bad)?;
        let den: BigInt = parse_int(den.trim()).ok_or_else(bad)?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (whole, fractional) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && fractional.is_empty() {
        return Err(bad());
    }
    if !whole.bytes().chain(fractional.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let all_digits = format!("{whole}{fractional}");
    let numerator: BigInt = all_digits.parse().map_err(|_| bad())?;
    let scale = exponent - fractional.len() as i64;
    let ten = BigInt::from(10);
    let magnitude = if scale >= 0 {
        Rational::from_integer(numerator * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(numerator, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(if negative { -magnitude } else { magnitude })
}

fn parse_int(s: &str) -> Option<BigInt> {
    let body = s.strip_prefix(['-', '+']).unwrap_or(s);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Formats as `p/q` in lowest terms with `q > 0`, including `n/1` for integers.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn is_positive(r: &Rational) -> bool {
    r.is_positive()
}

pub fn sum<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    values.into_iter().fold(Rational::zero(), |acc, v| acc + v)
}

pub fn one() -> Rational {
    Rational::one()
}

/// Serde adapter writing a [`Rational`] as its `p/q` string.
pub mod serde_str {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(
            r: &Option<Rational>,
            s: S,
        ) -> std::result::Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_some(&format_rational(r)),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Option<Rational>, D::Error> {
            let text = Option::<String>::deserialize(d)?;
            text.map(|t| parse_rational(&t).map_err(serde::de::Error::custom))
                .transpose()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals_exactly() {
        assert_eq!(parse_rational("2/3").unwrap(), frac(2, 3));
        assert_eq!(parse_rational("-4/6").unwrap(), frac(-2, 3));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational("0.1").unwrap(), frac(1, 10));
        assert_eq!(parse_rational("-1.25").unwrap(), frac(-5, 4));
        assert_eq!(parse_rational(".5").unwrap(), frac(1, 2));
        assert_eq!(parse_rational("2.5e2").unwrap(), int(250));
        assert_eq!(parse_rational("15E-1").unwrap(), frac(3, 2));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "1/0", "abc", "1.2.3", "1/x", "--1", ".", "1e"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }

    #[test]
    fn formats_lowest_terms() {
        assert_eq!(format_rational(&frac(6, -4)), "-3/2");
        assert_eq!(format_rational(&int(5)), "5/1");
        assert_eq!(format_rational(&Rational::zero()), "0/1");
    }
}
