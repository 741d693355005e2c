//! Exact rational numbers and their `"p/q"` string form.

use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};

/// Exact rational number. Every coordinate, pairing and length in the crate
/// uses this type.
pub type Rational = num_rational::Ratio<i64>;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"p/q"` or `"p"`; accepts ASCII or Unicode minus.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim().replace('−', "-");
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(rat(n, d))
        }
        None => Ok(int(t.parse().map_err(|_| bad())?)),
    }
}

/// Exact dot product of two coordinate vectors of equal length.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_half_odd_integer(q: &Rational) -> bool {
    !q.is_integer() && (q * int(2)).is_integer()
}

/// `(-1)^k` for an integer-valued rational exponent; `None` if `q` is not
/// an integer.
pub fn sign_power(q: &Rational) -> Option<i64> {
    if !q.is_integer() {
        return None;
    }
    Some(if q.to_integer().rem_euclid(2) == 0 { 1 } else { -1 })
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

pub fn is_one(q: &Rational) -> bool {
    q.is_one()
}

/// Serde adapter writing rational vectors as arrays of `"p/q"` strings.
pub mod serde_vec {
    use super::{format_rational, Rational};
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for q in v {
            seq.serialize_element(&format_rational(q))?;
        }
        seq.end()
    }
}

/// Serde adapter writing a single rational as a `"p/q"` string.
pub mod serde_one {
    use super::{format_rational, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_strings() {
        for q in [rat(1, 2), rat(-17, 4), int(3), int(0), rat(-1, 1)] {
            assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
        }
        assert_eq!(parse_rational("−3/6").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn sign_powers() {
        assert_eq!(sign_power(&int(-3)), Some(-1));
        assert_eq!(sign_power(&int(4)), Some(1));
        assert_eq!(sign_power(&rat(1, 2)), None);
        assert!(is_half_odd_integer(&rat(-3, 2)));
        assert!(!is_half_odd_integer(&int(1)));
        assert!(!is_half_odd_integer(&rat(1, 4)));
    }
}
