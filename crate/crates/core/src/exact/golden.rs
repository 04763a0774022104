use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::Error;

/// Element `p + q·√5` of the real quadratic field ℚ(√5).
///
/// The basis `{1, √5}` makes the sign test a single rational comparison of
/// `p²` against `5q²`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GoldenNumber {
    pub p: Rational,
    pub q: Rational,
}

impl GoldenNumber {
    pub fn new(p: Rational, q: Rational) -> Self {
        GoldenNumber { p, q }
    }

    pub fn from_rational(p: Rational) -> Self {
        GoldenNumber { p, q: Rational::zero() }
    }

    pub fn zero() -> Self {
        GoldenNumber::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// φ = 1/2 + (1/2)√5.
    pub fn phi() -> Self {
        GoldenNumber::new(Rational::new(1, 2), Rational::new(1, 2))
    }

    pub fn sqrt5() -> Self {
        GoldenNumber::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn signum(&self) -> i8 {
        golden_sign(self)
    }

    /// `p - q√5`.
    pub fn conjugate(&self) -> Self {
        GoldenNumber::new(self.p.clone(), -&self.q)
    }

    /// Field norm `p² − 5q²`.
    pub fn norm(&self) -> Rational {
        &(&self.p * &self.p) - &(&Rational::from(5) * &(&self.q * &self.q))
    }

    pub fn checked_div(&self, rhs: &GoldenNumber) -> Option<GoldenNumber> {
        let norm = rhs.norm();
        // Nonzero elements have nonzero norm since √5 is irrational.
        let inv = norm.recip()?;
        let num = self * &rhs.conjugate();
        Some(GoldenNumber::new(&num.p * &inv, &num.q * &inv))
    }

    pub fn scale(&self, k: &Rational) -> GoldenNumber {
        GoldenNumber::new(&self.p * k, &self.q * k)
    }

    pub fn to_f64(&self) -> f64 {
        let (p, root) = (self.p.to_f64(), self.q.to_f64() * 5f64.sqrt());
        if (p + root).abs() >= (p - root).abs() {
            return p + root;
        }
        // near-cancellation: divide the exact norm by the conjugate
        self.norm().to_f64() / (p - root)
    }

    /// Exact `⌊x⌋`, seeded from a float estimate and settled by sign checks.
    pub fn floor(&self) -> BigInt {
        let seed = self.to_f64().floor();
        let mut t = if seed.is_finite() {
            BigInt::from(seed as i128)
        } else {
            self.p.floor()
        };
        loop {
            let below = self - &GoldenNumber::from_rational(Rational::from_integer(t.clone()));
            if below.signum() < 0 {
                t -= 1;
                continue;
            }
            let above = &below - &GoldenNumber::one();
            if above.signum() >= 0 {
                t += 1;
                continue;
            }
            return t;
        }
    }

    /// `x − ⌊x⌋`, always in `[0, 1)`.
    pub fn fract(&self) -> GoldenNumber {
        let t = self.floor();
        self - &GoldenNumber::from_rational(Rational::from_integer(t))
    }
}

/// Exact sign of `p + q√5`.
///
/// Components of equal sign decide directly; otherwise the component with
/// the larger square wins, comparing `p²` with `5q²`.
pub fn golden_sign(x: &GoldenNumber) -> i8 {
    let sp = x.p.signum();
    let sq = x.q.signum();
    if sp == 0 {
        return sq;
    }
    if sq == 0 || sp == sq {
        return sp;
    }
    let p2 = &x.p * &x.p;
    let q2 = &Rational::from(5) * &(&x.q * &x.q);
    match p2.cmp(&q2) {
        Ordering::Greater => sp,
        Ordering::Less => sq,
        Ordering::Equal => unreachable!("p² = 5q² has no rational solution besides 0"),
    }
}

/// `{m·φ}` exactly, with the integer part removed.
///
/// Negative `m` is accepted and satisfies `{(−m)φ} = 1 − {mφ}`.
pub fn golden_frac(m: i64) -> GoldenNumber {
    GoldenNumber::phi().scale(&Rational::from(m)).fract()
}

impl PartialOrd for GoldenNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl Add<&GoldenNumber> for &GoldenNumber {
    type Output = GoldenNumber;
    fn add(self, rhs: &GoldenNumber) -> GoldenNumber {
        GoldenNumber::new(&self.p + &rhs.p, &self.q + &rhs.q)
    }
}

impl Sub<&GoldenNumber> for &GoldenNumber {
    type Output = GoldenNumber;
    fn sub(self, rhs: &GoldenNumber) -> GoldenNumber {
        GoldenNumber::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}

impl Mul<&GoldenNumber> for &GoldenNumber {
    type Output = GoldenNumber;
    fn mul(self, rhs: &GoldenNumber) -> GoldenNumber {
        let five = Rational::from(5);
        let p = &(&self.p * &rhs.p) + &(&five * &(&self.q * &rhs.q));
        let q = &(&self.p * &rhs.q) + &(&self.q * &rhs.p);
        GoldenNumber::new(p, q)
    }
}

impl Add for GoldenNumber {
    type Output = GoldenNumber;
    fn add(self, rhs: GoldenNumber) -> GoldenNumber {
        &self + &rhs
    }
}

impl Sub for GoldenNumber {
    type Output = GoldenNumber;
    fn sub(self, rhs: GoldenNumber) -> GoldenNumber {
        &self - &rhs
    }
}

impl Mul for GoldenNumber {
    type Output = GoldenNumber;
    fn mul(self, rhs: GoldenNumber) -> GoldenNumber {
        &self * &rhs
    }
}

impl Neg for GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        GoldenNumber::new(-self.p, -self.q)
    }
}

impl Neg for &GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        GoldenNumber::new(-&self.p, -&self.q)
    }
}

impl fmt::Display for GoldenNumber {
    /// Renders as `(p)+(q)sqrt5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})+({})sqrt5", self.p, self.q)
    }
}

impl FromStr for GoldenNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::Parse(format!("not a golden number: {s:?}"));
        let body = s.trim().strip_suffix("sqrt5").ok_or_else(bad)?;
        let inner = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (p, q) = inner.split_once(")+(").ok_or_else(bad)?;
        Ok(GoldenNumber::new(p.parse()?, q.parse()?))
    }
}

impl From<Rational> for GoldenNumber {
    fn from(p: Rational) -> Self {
        GoldenNumber::from_rational(p)
    }
}

impl One for GoldenNumber {
    fn one() -> Self {
        GoldenNumber::one()
    }
}

impl Zero for GoldenNumber {
    fn zero() -> Self {
        GoldenNumber::zero()
    }

    fn is_zero(&self) -> bool {
        GoldenNumber::is_zero(self)
    }
}
