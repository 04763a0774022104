use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Sub};

use num_rational::Ratio;

use super::float::FloatValue;
use super::golden_int::GoldenInt;
use super::rational::Rational;
use super::value::{CircleValue, Quantity};

/// Machine-word fraction used for radical-inverse coordinates. Denominators
/// are powers of the sequence base, so sums of gaps never outgrow them.
pub type Fraction = Ratio<i64>;

/// Coordinate and arc-length arithmetic shared by all circle statistics.
pub trait ArcScalar:
    Copy + Ord + Debug + Send + Sync + Add<Output = Self> + Sub<Output = Self> + 'static
{
    /// Whether comparisons are decided exactly.
    const EXACT: bool;

    fn zero() -> Self;

    fn one() -> Self;

    /// Orders `self` against `num / den` with `den > 0`.
    fn cmp_ratio(&self, num: i64, den: i64) -> Ordering;

    fn to_f64(&self) -> f64;

    fn to_quantity(&self) -> Quantity;

    fn to_circle_value(&self) -> CircleValue;

    /// `num / den` in the scalar's own field (rendered to float if inexact).
    fn quotient(num: &Self, den: &Self) -> Quantity;

    /// Absolute error of one stored coordinate.
    fn error_bound() -> f64 {
        0.0
    }
}

impl ArcScalar for Fraction {
    const EXACT: bool = true;

    fn zero() -> Self {
        Ratio::from_integer(0)
    }

    fn one() -> Self {
        Ratio::from_integer(1)
    }

    fn cmp_ratio(&self, num: i64, den: i64) -> Ordering {
        self.cmp(&Ratio::new(num, den))
    }

    fn to_f64(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }

    fn to_quantity(&self) -> Quantity {
        Quantity::Rational(Rational::from(*self))
    }

    fn to_circle_value(&self) -> CircleValue {
        CircleValue::Rational(Rational::from(*self))
    }

    fn quotient(num: &Self, den: &Self) -> Quantity {
        Quantity::Rational(&Rational::from(*num) / &Rational::from(*den))
    }
}

impl ArcScalar for GoldenInt {
    const EXACT: bool = true;

    fn zero() -> Self {
        GoldenInt::ZERO
    }

    fn one() -> Self {
        GoldenInt::ONE
    }

    fn cmp_ratio(&self, num: i64, den: i64) -> Ordering {
        GoldenInt::cmp_ratio(self, num, den)
    }

    fn to_f64(&self) -> f64 {
        GoldenInt::to_f64(self)
    }

    fn to_quantity(&self) -> Quantity {
        Quantity::Golden(self.to_golden())
    }

    fn to_circle_value(&self) -> CircleValue {
        CircleValue::Golden(self.to_golden())
    }

    fn quotient(num: &Self, den: &Self) -> Quantity {
        let q = num
            .to_golden()
            .checked_div(&den.to_golden())
            .expect("division by a zero length");
        Quantity::Golden(q)
    }
}

impl ArcScalar for FloatValue {
    const EXACT: bool = false;

    fn zero() -> Self {
        FloatValue::from_f64(0.0)
    }

    fn one() -> Self {
        FloatValue::from_f64(1.0)
    }

    fn cmp_ratio(&self, num: i64, den: i64) -> Ordering {
        let target = FloatValue::from_f64(num as f64).div(&FloatValue::from_f64(den as f64));
        self.cmp(&target)
    }

    fn to_f64(&self) -> f64 {
        FloatValue::to_f64(self)
    }

    fn to_quantity(&self) -> Quantity {
        Quantity::Float(FloatValue::to_f64(self))
    }

    fn to_circle_value(&self) -> CircleValue {
        CircleValue::Float(*self)
    }

    fn quotient(num: &Self, den: &Self) -> Quantity {
        Quantity::Float(num.div(den).to_f64())
    }

    fn error_bound() -> f64 {
        FloatValue::ERROR_BOUND
    }
}
