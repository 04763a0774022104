use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::engines::{golden_windows, DifferenceOrder};
use crate::error::{Error, Result};
use crate::exact::{GoldenInt, GoldenNumber, Rational};

/// `F_k` with `F_0 = 0`, `F_1 = 1`; exact up to `k = 92`.
pub fn fibonacci(k: u32) -> u64 {
    assert!(k <= 92, "F_{k} overflows u64");
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..k {
        (a, b) = (b, a + b);
    }
    a
}

/// Largest deviation `|#(X ∩ I) − F_k·|I||` over all closed arcs `I`, where
/// `X = {0, {φ}, …, {(F_k − 1)φ}}`.
///
/// An arc holding `c + 1` points is at least as long as the shortest span of
/// `c` gaps, and an arc holding `c − 1` points is shorter than the longest
/// span of `c` gaps but can come arbitrarily close, so the supremum is the
/// larger of `c + 1 − F·shortest(c)` and `F·longest(c) − (c − 1)`.
pub fn fibonacci_prefix_deviation(k: u32) -> Result<GoldenNumber> {
    if !(2..=40).contains(&k) {
        return Err(Error::InvalidArgument(format!("k = {k} outside 2..=40")));
    }
    let f = fibonacci(k);
    let order = DifferenceOrder::new(f - 1);
    let w = golden_windows(&order, f);
    let fi = f as i64;
    let over = w
        .shortest
        .iter()
        .enumerate()
        .take(f as usize)
        .map(|(c, s)| GoldenInt::new(c as i64 + 1, 0) - s.times(fi));
    let under = w
        .longest
        .iter()
        .enumerate()
        .skip(1)
        .map(|(c, l)| l.times(fi) - GoldenInt::new(c as i64 - 1, 0));
    let best = over.chain(under).max().expect("at least one point");
    Ok(best.to_golden())
}

/// Whether `|F_{k+1}/F_k − φ| ≤ 1/F_k²`, decided in ℚ(√5).
pub fn fibonacci_approximation_holds(k: u32) -> bool {
    let (fk, fk1) = (fibonacci(k) as i64, fibonacci(k + 1) as i64);
    let diff = GoldenNumber::from_rational(Rational::new(fk1, fk)) - GoldenNumber::phi();
    let bound = GoldenNumber::from_rational(Rational::new(1, fk as i128 * fk as i128));
    let abs = if diff.signum() < 0 { -diff } else { diff };
    abs <= bound
}

pub fn fibonacci_coprime(k: u32) -> bool {
    fibonacci(k).gcd(&fibonacci(k + 1)) == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeckendorfDecomposition {
    pub value: u64,
    /// Decreasing Fibonacci numbers removed greedily.
    pub parts: Vec<u64>,
    pub remainder: u64,
}

impl ZeckendorfDecomposition {
    /// `remainder ≤ 2·(last part)`; trivially true when nothing remains.
    pub fn remainder_bound_holds(&self) -> bool {
        match self.parts.last() {
            Some(&last) => self.remainder <= 2 * last,
            None => self.remainder == 0,
        }
    }

    /// No two parts are consecutive Fibonacci numbers.
    pub fn is_sparse(&self) -> bool {
        self.parts.windows(2).all(|p| p[0] - p[1] > p[1])
    }
}

/// Removes the largest Fibonacci number not exceeding the running remainder,
/// at most `max_parts` times (or until nothing is left).
pub fn zeckendorf(value: u64, max_parts: Option<usize>) -> Result<ZeckendorfDecomposition> {
    if value == 0 {
        return Err(Error::InvalidArgument("cannot decompose 0".into()));
    }
    // 1, 2, 3, 5, … (the repeated 1 is never needed)
    let mut fibs = vec![1u64, 2];
    while let Some(next) = fibs[fibs.len() - 1].checked_add(fibs[fibs.len() - 2]) {
        if next > value {
            break;
        }
        fibs.push(next);
    }
    let limit = max_parts.unwrap_or(usize::MAX);
    let mut parts = Vec::new();
    let mut rest = value;
    while rest > 0 && parts.len() < limit {
        let i = fibs.partition_point(|&f| f <= rest) - 1;
        parts.push(fibs[i]);
        rest -= fibs[i];
    }
    Ok(ZeckendorfDecomposition {
        value,
        parts,
        remainder: rest,
    })
}
