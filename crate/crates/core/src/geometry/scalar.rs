//! Exact rational scalars and their decimal text forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number used for every coordinate.
pub type Scalar = BigRational;

/// Prefix marking a rounded (non-terminating) decimal.
pub const APPROX_MARKER: char = '~';

/// Parses an exact scalar from `"-12.5"`, `"3e-2"`, `"7"` or `"1/3"`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let s = text.trim();
    let bad = || Error::Parse(format!("not a number: {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let all: BigInt = format!("0{int_part}{frac_part}").parse().map_err(|_| bad())?;
    let scale = exponent - frac_part.len() as i64;
    if scale.unsigned_abs() > 4096 {
        return Err(bad());
    }
    let pow = num_traits::pow(BigInt::from(10), scale.unsigned_abs() as usize);
    let mut value = if scale >= 0 { BigRational::from_integer(all * pow) } else { BigRational::new(all, pow) };
    if negative {
        value = -value;
    }
    Ok(value)
}

/// Returns the finite decimal expansion of `v`, if it has one.
pub fn finite_decimal(v: &Scalar) -> Option<String> {
    let mut d = v.denom().clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let (mut twos, mut fives) = (0usize, 0usize);
    while d.is_even() {
        d /= &two;
        twos += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        fives += 1;
    }
    if !d.is_one() {
        return None;
    }
    let k = twos.max(fives);
    let scaled = v.numer() * num_traits::pow(BigInt::from(10), k) / v.denom();
    Some(place_point(&scaled, k))
}

fn place_point(scaled: &BigInt, k: usize) -> String {
    let negative = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let body = if k == 0 {
        digits
    } else {
        let padded = format!("{digits:0>width$}", width = k + 1);
        let (i, f) = padded.split_at(padded.len() - k);
        let f = f.trim_end_matches('0');
        if f.is_empty() {
            i.to_string()
        } else {
            format!("{i}.{f}")
        }
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Decimal text for `v`: exact when the expansion terminates, otherwise 15
/// significant digits prefixed with [`APPROX_MARKER`].
pub fn format_scalar(v: &Scalar) -> String {
    finite_decimal(v).unwrap_or_else(|| format!("{APPROX_MARKER}{}", significant_digits(v, 15)))
}

/// Lossless text for `v`: a terminating decimal or `p/q`.
pub fn format_scalar_exact(v: &Scalar) -> String {
    finite_decimal(v).unwrap_or_else(|| format!("{}/{}", v.numer(), v.denom()))
}

/// Rounds `v` to `sig` significant decimal digits (half away from zero).
pub fn significant_digits(v: &Scalar, sig: usize) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let ten = BigRational::from_integer(BigInt::from(10));
    let a = v.abs();
    let mut e: i64 = 0;
    let mut p = BigRational::one();
    while p > a {
        p /= &ten;
        e -= 1;
    }
    while &p * &ten <= a {
        p *= &ten;
        e += 1;
    }
    // a in [10^e, 10^(e+1)); keep digits down to 10^(e - sig + 1)
    let k = sig as i64 - 1 - e;
    let scale = num_traits::pow(BigInt::from(10), k.unsigned_abs() as usize);
    let shifted = if k >= 0 { &a * BigRational::from_integer(scale) } else { &a / BigRational::from_integer(scale) };
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut rounded = (shifted + half).floor().to_integer();
    if v.is_negative() {
        rounded = -rounded;
    }
    if k >= 0 {
        place_point(&rounded, k as usize)
    } else {
        (rounded * num_traits::pow(BigInt::from(10), (-k) as usize)).to_string()
    }
}

/// Nearest `f64` to `v`.
pub fn to_f64(v: &Scalar) -> f64 {
    v.to_f64().unwrap_or_else(|| {
        let n = v.numer().to_f64().unwrap_or(f64::NAN);
        let d = v.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Exact rational equal to `v` truncated toward zero after `digits` decimals.
pub fn truncate_f64(v: f64, digits: u32) -> Result<Scalar> {
    if !v.is_finite() {
        return Err(Error::InvalidArgument(format!("non-finite value {v}")));
    }
    let exact = BigRational::from_float(v).ok_or_else(|| Error::InvalidArgument(format!("{v}")))?;
    let scale = BigRational::from_integer(num_traits::pow(BigInt::from(10), digits as usize));
    Ok((exact * &scale).trunc() / scale)
}

pub fn from_int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

pub(crate) mod serde_scalar {
    use super::{format_scalar, Scalar};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &Scalar, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_scalar(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(parse_scalar("17.59").unwrap(), q(1759, 100));
        assert_eq!(parse_scalar("-2.05").unwrap(), q(-205, 100));
        assert_eq!(parse_scalar("-.5").unwrap(), q(-1, 2));
        assert_eq!(parse_scalar("26").unwrap(), q(26, 1));
        assert_eq!(parse_scalar("1.5e2").unwrap(), q(150, 1));
        assert_eq!(parse_scalar("25e-3").unwrap(), q(1, 40));
        assert_eq!(parse_scalar(" 2/6 ").unwrap(), q(1, 3));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "-", ".", "1.2.3", "abc", "1/0", "1e", "0x10", "~0.3"] {
            assert!(parse_scalar(s).is_err(), "{s}");
        }
    }

    #[test]
    fn formats_terminating_decimals() {
        assert_eq!(format_scalar(&q(1759, 100)), "17.59");
        assert_eq!(format_scalar(&q(-1, 40)), "-0.025");
        assert_eq!(format_scalar(&q(9, 4)), "2.25");
        assert_eq!(format_scalar(&q(-7, 1)), "-7");
        assert_eq!(format_scalar(&q(0, 1)), "0");
    }

    #[test]
    fn formats_repeating_decimals_approximately() {
        assert_eq!(format_scalar(&q(1, 3)), "~0.333333333333333");
        assert_eq!(format_scalar(&q(-2, 3)), "~-0.666666666666667");
        assert_eq!(format_scalar(&q(100000, 7)), "~14285.7142857143");
        assert_eq!(format_exact_roundtrip(&q(22, 7)), q(22, 7));
    }

    fn format_exact_roundtrip(v: &Scalar) -> Scalar {
        parse_scalar(&format_scalar_exact(v)).unwrap()
    }

    #[test]
    fn significant_digit_rounding_carries() {
        assert_eq!(significant_digits(&q(9999, 1000), 3), "10");
        assert_eq!(significant_digits(&q(123456, 1), 2), "120000");
    }

    #[test]
    fn truncation_rounds_toward_zero() {
        assert_eq!(truncate_f64(0.123456789, 3).unwrap(), q(123, 1000));
        assert_eq!(truncate_f64(-0.123456789, 3).unwrap(), q(-123, 1000));
    }
}
