//! Arbitrary-precision rational scalars and small conveniences.
//!
//! All exact computation in this crate runs over [`Rat`], an alias for
//! `num_rational::BigRational`.  Values are always kept in reduced form with a
//! positive denominator by the underlying library; helpers here cover
//! construction, parsing and float conversion.

use alloc::string::String;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact rational scalar (arbitrary precision, reduced, positive denominator).
pub type Rat = num_rational::BigRational;

/// The rational zero.
pub fn zero() -> Rat {
    Rat::zero()
}

/// Rational from a machine integer.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n / d`.  Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from a big integer.
pub fn big(n: BigInt) -> Rat {
    Rat::from_integer(n)
}

/// Nearest `f64` (loses precision for large numerators/denominators).
pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational value of a finite `f64` (every finite float is rational).
pub fn from_f64(x: f64) -> Option<Rat> {
    Rat::from_float(x)
}

/// Error produced by [`parse`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse `{input}` as a rational number")]
pub struct ParseRatError {
    /// The offending input.
    pub input: String,
}

/// Parses `p`, `p/q`, or a plain decimal such as `-1.25` into a rational.
pub fn parse(s: &str) -> Result<Rat, ParseRatError> {
    let err = || ParseRatError {
        input: String::from(s),
    };
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| err())?;
        let d: BigInt = den.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((whole, fracpart)) = s.split_once('.') {
        if fracpart.is_empty() || !fracpart.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let negative = whole.starts_with('-');
        let wholenum: BigInt = if whole == "-" || whole.is_empty() {
            BigInt::zero()
        } else {
            whole.parse().map_err(|_| err())?
        };
        let scale = BigInt::from(10u8).pow(fracpart.len() as u32);
        let fracnum: BigInt = fracpart.parse().map_err(|_| err())?;
        let mag = wholenum.abs() * &scale + fracnum;
        let signed = if negative { -mag } else { mag };
        return Ok(Rat::new(signed, scale));
    }
    let n: BigInt = s.parse().map_err(|_| err())?;
    Ok(Rat::from_integer(n))
}

/// Renders a vector of rationals as space-separated `p/q` tokens.
pub fn format_vec(v: &[Rat]) -> String {
    use alloc::format;
    let parts: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
    parts.join(" ")
}

/// Clears denominators and common factors: returns the unique primitive
/// integer vector that is a positive multiple of `v`, as rationals.
/// The zero vector is returned unchanged.
pub fn primitive(v: &[Rat]) -> Vec<Rat> {
    use num_integer::Integer;
    let mut lcm = BigInt::from(1);
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for n in &ints {
        gcd = gcd.gcd(n);
    }
    if gcd.is_zero() {
        return v.to_vec();
    }
    ints.into_iter().map(|n| Rat::from_integer(n / &gcd)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn parse_forms() {
        assert_eq!(parse("3").unwrap(), int(3));
        assert_eq!(parse("-7/2").unwrap(), frac(-7, 2));
        assert_eq!(parse("4/6").unwrap(), frac(2, 3));
        assert_eq!(parse("1.25").unwrap(), frac(5, 4));
        assert_eq!(parse("-0.5").unwrap(), frac(-1, 2));
        assert_eq!(parse("-.5").unwrap(), frac(-1, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("abc").is_err());
    }

    #[test]
    fn float_round_trip() {
        let x = frac(-3, 8);
        assert_eq!(from_f64(to_f64(&x)).unwrap(), x);
        assert_eq!(from_f64(0.1).unwrap() == frac(1, 10), false); // floats are exact, not decimal
    }

    #[test]
    fn primitive_vector() {
        let v = vec![frac(1, 2), frac(-3, 4), int(0)];
        assert_eq!(primitive(&v), vec![int(2), int(-3), int(0)]);
        let z = vec![zero(), zero()];
        assert_eq!(primitive(&z), z);
    }
}
