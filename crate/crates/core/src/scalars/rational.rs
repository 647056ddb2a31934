//! Helpers around [`BigRational`], the base field of every computation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let parse_int = |s: &str| -> Result<BigInt> {
        s.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("not a rational: {text:?}")))
    };
    match text.split_once('/') {
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Rational::new(parse_int(p)?, q))
        }
        None => Ok(Rational::from_integer(parse_int(text)?)),
    }
}

/// `Some(k)` when `q` is an integer that fits in an `i64`.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

/// True iff `q` is a positive integer.
pub fn is_positive_integer(q: &Rational) -> bool {
    q.is_integer() && q.is_positive()
}

pub fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RationalRepr {
    Text(String),
    Int(i64),
}

impl RationalRepr {
    fn into_rational(self) -> Result<Rational> {
        match self {
            RationalRepr::Text(s) => parse_rational(&s),
            RationalRepr::Int(k) => Ok(int(k)),
        }
    }
}

/// Serde adapter writing a rational as a `"p/q"` string (integers as `"p"`).
pub mod as_string {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        q.to_string().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        RationalRepr::deserialize(d)?.into_rational().map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for sequences of rationals written as strings.
pub mod vec_as_string {
    use super::*;

    pub fn serialize<S: Serializer>(qs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        qs.iter().map(|q| q.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
        Vec::<RationalRepr>::deserialize(d)?
            .into_iter()
            .map(|r| r.into_rational().map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        assert_eq!(parse_rational("6/-4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(rat(-17, 7).to_string(), "-17/7");
    }

    #[test]
    fn positive_integer_test() {
        assert!(is_positive_integer(&int(3)));
        assert!(!is_positive_integer(&int(0)));
        assert!(!is_positive_integer(&rat(3, 2)));
        assert_eq!(to_i64(&rat(8, 4)), Some(2));
    }
}
