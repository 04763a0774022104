use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::float::FloatValue;
use super::golden::GoldenNumber;
use super::rational::Rational;
use crate::error::Error;

/// A point coordinate on the circle `[0, 1)`.
///
/// Comparisons between two exact cases of the same kind are exact. Float
/// points only occur for the logarithmic sequence and carry
/// [`FloatValue::ERROR_BOUND`]. Points of different kinds are unordered.
#[derive(Clone, Debug, PartialEq)]
pub enum CircleValue {
    Rational(Rational),
    Golden(GoldenNumber),
    Float(FloatValue),
}

impl CircleValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            CircleValue::Rational(x) => x.to_f64(),
            CircleValue::Golden(x) => x.to_f64(),
            CircleValue::Float(x) => x.to_f64(),
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, CircleValue::Float(_))
    }

    /// Absolute error of the stored coordinate.
    pub fn error_bound(&self) -> f64 {
        match self {
            CircleValue::Float(_) => FloatValue::ERROR_BOUND,
            _ => 0.0,
        }
    }
}

impl PartialOrd for CircleValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (CircleValue::Rational(a), CircleValue::Rational(b)) => Some(a.cmp(b)),
            (CircleValue::Golden(a), CircleValue::Golden(b)) => Some(a.cmp(b)),
            (CircleValue::Float(a), CircleValue::Float(b)) => Some(a.cmp(b)),
            _ => None,
        }
    }
}

impl fmt::Display for CircleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CircleValue::Rational(x) => x.fmt(f),
            CircleValue::Golden(x) => x.fmt(f),
            CircleValue::Float(x) => x.fmt(f),
        }
    }
}

/// A derived length, ratio or statistic in whichever number system the
/// underlying sequence lives in.
#[derive(Clone, Debug, PartialEq)]
pub enum Quantity {
    Rational(Rational),
    Golden(GoldenNumber),
    Float(f64),
}

impl Quantity {
    pub fn to_f64(&self) -> f64 {
        match self {
            Quantity::Rational(x) => x.to_f64(),
            Quantity::Golden(x) => x.to_f64(),
            Quantity::Float(x) => *x,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Quantity::Float(_))
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Rational(x) => x.fmt(f),
            Quantity::Golden(x) => x.fmt(f),
            Quantity::Float(x) => write!(f, "{x:?}"),
        }
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.ends_with("sqrt5") {
            return Ok(Quantity::Golden(s.parse()?));
        }
        if s.contains('/') {
            return Ok(Quantity::Rational(s.parse()?));
        }
        s.parse::<f64>()
            .map(Quantity::Float)
            .map_err(|_| Error::Parse(format!("not a quantity: {s:?}")))
    }
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Quantity {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
