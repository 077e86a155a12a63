//! Exact rational scalars and their string form `"p/q"` (or `"p"` when `q = 1`).

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical string: reduced, positive denominator, denominator omitted when one.
pub fn format(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

pub fn format_vec(v: &[Rational]) -> Vec<String> {
    v.iter().map(format).collect()
}

pub fn parse_vec(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse(s)).collect()
}

/// Scales a vector to a primitive integer vector whose first nonzero entry is positive.
/// The zero vector is returned unchanged.
pub fn primitive(v: &[Rational]) -> Vec<Rational> {
    let Some(lead) = v.iter().find(|x| !x.is_zero()) else {
        return v.to_vec();
    };
    let mut den = BigInt::one();
    for x in v {
        den = den.lcm(x.denom());
    }
    let nums: Vec<BigInt> = v.iter().map(|x| (x * &den).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &nums {
        g = g.gcd(x);
    }
    if lead.is_negative() {
        g = -g;
    }
    nums.into_iter()
        .map(|x| Rational::from_integer(x / &g))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strings() {
        assert_eq!(format(&frac(6, -4)), "-3/2");
        assert_eq!(format(&int(5)), "5");
        assert_eq!(parse("-3/2").unwrap(), frac(-3, 2));
        assert_eq!(parse("4/2").unwrap(), int(2));
        assert_eq!(parse(" 7 ").unwrap(), int(7));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn primitive_scaling() {
        assert_eq!(primitive(&[int(1), frac(-1, 2)]), vec![int(2), int(-1)]);
        assert_eq!(primitive(&[int(0), int(-4), int(6)]), vec![int(0), int(2), int(-3)]);
        assert_eq!(primitive(&[int(0), int(0)]), vec![int(0), int(0)]);
    }
}
