use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use twofloat::TwoFloat;

use crate::error::Error;

/// Double-double value (about 106 significand bits) used for the
/// logarithmic sequence, which has no finite exact representation.
#[derive(Clone, Copy, Debug)]
pub struct FloatValue(TwoFloat);

impl FloatValue {
    /// Absolute error bound carried by every generated point.
    pub const ERROR_BOUND: f64 = 8.673_617_379_884_035e-19; // 2^-60

    pub fn from_f64(x: f64) -> Self {
        FloatValue(TwoFloat::from(x))
    }

    pub fn from_parts(hi: f64, lo: f64) -> Self {
        FloatValue(TwoFloat::new_add(hi, lo))
    }

    pub fn hi(&self) -> f64 {
        self.0.hi()
    }

    pub fn lo(&self) -> f64 {
        self.0.lo()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.hi() + self.0.lo()
    }

    pub fn inner(&self) -> TwoFloat {
        self.0
    }

    /// `log₂(y) mod 1` for `1 ≤ y < 2^53`.
    pub fn log2_mod1(y: u64) -> Self {
        assert!((1..1u64 << 53).contains(&y), "log2_mod1 domain is [1, 2^53)");
        let e = 63 - y.leading_zeros();
        if y == 1u64 << e {
            return FloatValue::from_f64(0.0);
        }
        // y / 2^e lies in (1, 2) and is exact in binary.
        let x = TwoFloat::from(y as f64 / (1u64 << e) as f64);
        FloatValue(x.log2())
    }

    pub fn mul_f64(&self, k: f64) -> Self {
        FloatValue(self.0 * k)
    }

    pub fn div(&self, rhs: &FloatValue) -> Self {
        FloatValue(self.0 / rhs.0)
    }
}

impl PartialEq for FloatValue {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for FloatValue {}

impl PartialOrd for FloatValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FloatValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.hi()
            .total_cmp(&other.hi())
            .then_with(|| self.lo().total_cmp(&other.lo()))
    }
}

impl Add for FloatValue {
    type Output = FloatValue;
    fn add(self, rhs: FloatValue) -> FloatValue {
        FloatValue(self.0 + rhs.0)
    }
}

impl Sub for FloatValue {
    type Output = FloatValue;
    fn sub(self, rhs: FloatValue) -> FloatValue {
        FloatValue(self.0 - rhs.0)
    }
}

impl fmt::Display for FloatValue {
    /// Lossless `hi+lo` rendering, e.g. `5.8e-1+1.2e-17`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}{:+e}", self.hi(), self.lo())
    }
}

impl FromStr for FloatValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a double-double value: {s:?}"));
        // split at the sign that starts the low part (not an exponent sign)
        let bytes = s.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'e')
            .ok_or_else(bad)?;
        let hi: f64 = s[..split].parse().map_err(|_| bad())?;
        let lo: f64 = s[split..].parse().map_err(|_| bad())?;
        Ok(FloatValue::from_parts(hi, lo))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_of_two_are_zero() {
        for e in 0..52 {
            assert_eq!(FloatValue::log2_mod1(1 << e).to_f64(), 0.0);
        }
    }

    #[test]
    fn log_of_three() {
        let x = FloatValue::log2_mod1(3);
        assert!((x.to_f64() - (3f64.log2() - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn display_round_trip() {
        for y in [3u64, 5, 1001, 999_999] {
            let x = FloatValue::log2_mod1(y);
            let back: FloatValue = x.to_string().parse().unwrap();
            assert_eq!(back.hi(), x.hi());
            assert_eq!(back.lo(), x.lo());
        }
    }
}
