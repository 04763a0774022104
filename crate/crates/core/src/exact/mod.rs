//! Exact number systems: big rationals, the field ℚ(√5), the ring ℤ[φ]
//! used on hot paths, and the double-double fallback for the log sequence.

mod float;
mod golden;
mod golden_int;
mod rational;
mod scalar;
mod value;

pub use float::FloatValue;
pub use golden::{golden_frac, golden_sign, GoldenNumber};
pub use golden_int::GoldenInt;
pub use rational::{rational_compare, Rational};
pub use scalar::{ArcScalar, Fraction};
pub use value::{CircleValue, Quantity};
