use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{format_rational, parse_rational, Rational};
use crate::error::Error;

/// A point of the projective line: a finite rational or infinity.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Point {
    Finite(Rational),
    Infinity,
}

impl Point {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Point::Finite(q) => Some(q),
            Point::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Point::Infinity)
    }
}

impl From<Rational> for Point {
    fn from(q: Rational) -> Self {
        Point::Finite(q)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(q) => f.write_str(&format_rational(q)),
            Point::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Point {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Point::Infinity),
            t => parse_rational(t).map(Point::Finite),
        }
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
