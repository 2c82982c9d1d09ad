use num_bigint::BigInt;
use num_rational::BigRational;

use crate::{Error, Result};

pub type Rational = BigRational;

/// `p/q`, or `p` when `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::BadParameters(format!("not a rational: {text:?}"));
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => {
            (n.trim().parse::<BigInt>().map_err(|_| bad())?, d.trim().parse::<BigInt>().map_err(|_| bad())?)
        }
        None => (text.parse::<BigInt>().map_err(|_| bad())?, BigInt::from(1)),
    };
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod rational_serde {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use serde::ser::SerializeSeq;
        use serde::{Deserialize, Deserializer, Serializer};

        use super::super::{format_rational, parse_rational, Rational};

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&format_rational(r))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let texts = Vec::<String>::deserialize(d)?;
            texts.iter().map(|t| parse_rational(t).map_err(serde::de::Error::custom)).collect()
        }
    }
}
