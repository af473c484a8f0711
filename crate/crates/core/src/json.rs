//! Serde helpers for exact values: rationals travel as strings, polynomials as
//! ascending coefficient lists of strings.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serializer};

use crate::exact::{parse_rational, QPoly, Rational};

pub fn ser_rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

pub fn de_rational<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let s = String::deserialize(d)?;
    parse_rational(&s).map_err(D::Error::custom)
}

pub fn ser_rationals<S: Serializer>(qs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(|q| q.to_string()))
}

pub fn poly_to_strings(p: &QPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

pub fn poly_from_strings(cs: &[String]) -> crate::Result<QPoly> {
    Ok(QPoly::new(cs.iter().map(|c| parse_rational(c)).collect::<crate::Result<Vec<_>>>()?))
}

pub fn ser_poly<S: Serializer>(p: &QPoly, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(poly_to_strings(p))
}

pub fn de_poly<'de, D: Deserializer<'de>>(d: D) -> Result<QPoly, D::Error> {
    let v = Vec::<String>::deserialize(d)?;
    poly_from_strings(&v).map_err(D::Error::custom)
}

pub fn ser_polys<S: Serializer>(ps: &[QPoly], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(ps.iter().map(poly_to_strings))
}

pub fn de_polys<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<QPoly>, D::Error> {
    let v = Vec::<Vec<String>>::deserialize(d)?;
    v.iter().map(|p| poly_from_strings(p).map_err(D::Error::custom)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    #[derive(serde::Serialize, serde::Deserialize, PartialEq, Debug)]
    struct Wrap {
        #[serde(serialize_with = "ser_rational", deserialize_with = "de_rational")]
        q: Rational,
        #[serde(serialize_with = "ser_poly", deserialize_with = "de_poly")]
        p: QPoly,
    }

    #[test]
    fn roundtrip() {
        let w = Wrap { q: frac(-3, 4), p: QPoly::new(vec![frac(1, 2), frac(0, 1), frac(7, 1)]) };
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"q":"-3/4","p":["1/2","0","7"]}"#);
        assert_eq!(serde_json::from_str::<Wrap>(&s).unwrap(), w);
    }
}
