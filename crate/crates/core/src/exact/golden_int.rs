use std::cmp::Ordering;
use std::ops::{Add, Neg, Sub};

use super::golden::GoldenNumber;
use super::rational::Rational;

/// Element `a + b·φ` of the ring ℤ[φ].
///
/// Every point `{mφ}` of the golden Kronecker sequence, every difference of
/// two such points and every window sum lives here, so the whole Kronecker
/// pipeline runs on machine integers. Components must stay below 2^60 in
/// magnitude; the sign test squares them in `i128`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct GoldenInt {
    pub a: i64,
    pub b: i64,
}

const PHI_F64: f64 = 1.618_033_988_749_895;

/// Sign of `p + q·√5` for integers.
fn sign_p_q_sqrt5(p: i128, q: i128) -> i8 {
    let sp = p.signum() as i8;
    let sq = q.signum() as i8;
    if sp == 0 {
        return sq;
    }
    if sq == 0 || sp == sq {
        return sp;
    }
    match (p * p).cmp(&(5 * q * q)) {
        Ordering::Greater => sp,
        Ordering::Less => sq,
        Ordering::Equal => unreachable!("p² = 5q² forces p = q = 0"),
    }
}

/// Sign of `a + b·φ` given as wide integers: `2(a + bφ) = (2a + b) + b√5`.
fn sign_wide(a: i128, b: i128) -> i8 {
    sign_p_q_sqrt5(2 * a + b, b)
}

impl GoldenInt {
    pub const ZERO: GoldenInt = GoldenInt { a: 0, b: 0 };
    pub const ONE: GoldenInt = GoldenInt { a: 1, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        GoldenInt { a, b }
    }

    pub fn signum(&self) -> i8 {
        sign_wide(self.a as i128, self.b as i128)
    }

    /// Orders `self` against the rational `num / den`, `den > 0`.
    pub fn cmp_ratio(&self, num: i64, den: i64) -> Ordering {
        debug_assert!(den > 0);
        let den = den as i128;
        sign_wide(den * self.a as i128 - num as i128, den * self.b as i128).cmp(&0)
    }

    /// `⌊m·φ⌋`, seeded by a float estimate and corrected with exact signs.
    pub fn floor_of_multiple(m: i64) -> i64 {
        let mut t = (m as f64 * PHI_F64).floor() as i64;
        // m·φ − t must lie in [0, 1)
        while GoldenInt::new(-t, m).signum() < 0 {
            t -= 1;
        }
        while GoldenInt::new(-t - 1, m).signum() >= 0 {
            t += 1;
        }
        t
    }

    /// `{m·φ}` as `−⌊mφ⌋ + m·φ`.
    pub fn frac_of_multiple(m: i64) -> Self {
        GoldenInt::new(-Self::floor_of_multiple(m), m)
    }

    pub fn to_f64(&self) -> f64 {
        // a + bφ = (a + b/2) + (b/2)√5. When the two halves nearly cancel,
        // divide the exact norm a² + ab − b² by the conjugate instead.
        let (a, b) = (self.a as f64, self.b as f64);
        let root = (b / 2.0) * 5f64.sqrt();
        let direct = (a + b / 2.0) + root;
        let conjugate = (a + b / 2.0) - root;
        if direct.abs() >= conjugate.abs() {
            return direct;
        }
        let (a, b) = (self.a as i128, self.b as i128);
        (a * a + a * b - b * b) as f64 / conjugate
    }

    /// The same value in the `{1, √5}` basis with rational coefficients.
    pub fn to_golden(&self) -> GoldenNumber {
        GoldenNumber::new(
            Rational::new(2 * self.a as i128 + self.b as i128, 2),
            Rational::new(self.b, 2),
        )
    }

    /// Multiplies by an integer.
    pub fn times(&self, k: i64) -> Self {
        GoldenInt::new(self.a * k, self.b * k)
    }
}

impl PartialOrd for GoldenInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenInt {
    fn cmp(&self, other: &Self) -> Ordering {
        sign_wide(
            self.a as i128 - other.a as i128,
            self.b as i128 - other.b as i128,
        )
        .cmp(&0)
    }
}

impl Add for GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: GoldenInt) -> GoldenInt {
        GoldenInt::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for GoldenInt {
    type Output = GoldenInt;
    fn sub(self, rhs: GoldenInt) -> GoldenInt {
        GoldenInt::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt::new(-self.a, -self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::golden::golden_frac;

    #[test]
    fn float_conversion_survives_cancellation() {
        use astro_float::{BigFloat, RoundingMode};
        let prec = 256;
        let rm = RoundingMode::ToEven;
        let five = BigFloat::from_u64(5, prec);
        let phi = BigFloat::from_u64(1, prec)
            .add(&five.sqrt(prec, rm), prec, rm)
            .div(&BigFloat::from_u64(2, prec), prec, rm);
        for m in [1i64, 55, 89, 987, 75_025, 832_040, 1_000_003, -317_811] {
            let x = GoldenInt::frac_of_multiple(m);
            let exact = BigFloat::from_i64(x.a, prec).add(&BigFloat::from_i64(x.b, prec).mul(&phi, prec, rm), prec, rm);
            let want = exact.to_string().parse::<f64>().unwrap();
            let rel = |got: f64| ((got - want) / want).abs();
            assert!(rel(x.to_f64()) < 1e-14, "m={m} {} vs {want}", x.to_f64());
            assert!(rel(x.to_golden().to_f64()) < 1e-14, "m={m}");
        }
    }

    #[test]
    fn frac_agrees_with_field_arithmetic() {
        for m in -200..=200 {
            assert_eq!(
                GoldenInt::frac_of_multiple(m).to_golden(),
                golden_frac(m),
                "m = {m}"
            );
        }
    }

    #[test]
    fn cmp_ratio_examples() {
        let x = GoldenInt::frac_of_multiple(2); // 0.2360…
        assert_eq!(x.cmp_ratio(1, 4), Ordering::Less);
        assert_eq!(x.cmp_ratio(1, 5), Ordering::Greater);
        assert_eq!(GoldenInt::ONE.cmp_ratio(3, 3), Ordering::Equal);
        assert_eq!(GoldenInt::ZERO.cmp_ratio(0, 7), Ordering::Equal);
    }

    #[test]
    fn ordering_is_by_value() {
        let phi = GoldenInt::new(0, 1);
        assert!(phi > GoldenInt::new(1, 0));
        assert!(phi < GoldenInt::new(2, 0));
        assert!(GoldenInt::new(-4, 2) < GoldenInt::ZERO);
        assert!(GoldenInt::new(-3, 2) > GoldenInt::ZERO);
    }
}
