//! Exact rational scalars and their text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn half() -> Rational {
    frac(1, 2)
}

/// Parses `a`, `-a`, or `a/b` with `b > 0`.
pub fn parse(text: &str) -> Result<Rational> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in {t:?}")))?;
    match den {
        None => Ok(Rational::from_integer(n)),
        Some(d) => {
            let d: BigInt = d
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator in {t:?}")))?;
            if !d.is_positive() {
                return Err(Error::Parse(format!("denominator must be positive in {t:?}")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical text: integers bare, otherwise `a/b` in lowest terms.
pub fn format(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_nonneg_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}

/// `Some(v)` when `r` is an integer that fits in an `i64`.
pub fn to_i64(r: &Rational) -> Option<i64> {
    if !r.is_integer() {
        return None;
    }
    i64::try_from(r.numer().clone()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse("-3").unwrap(), int(-3));
        assert_eq!(parse("1/2").unwrap(), half());
        assert_eq!(parse(" 4/6 ").unwrap(), frac(2, 3));
        assert_eq!(format(&frac(-6, 4)), "-3/2");
        assert_eq!(format(&int(7)), "7");
        assert!(parse("1/0").is_err());
        assert!(parse("1/-2").is_err());
        assert!(parse("x").is_err());
    }
}
