//! Window bounds on sorted base-2 prefixes, on integer numerators over the
//! grid `2^K` where `K` is the bit length of `n`.

use num_rational::Ratio;

use crate::exact::Fraction;
use crate::sequences::{bit_length, bit_reverse};

/// Source of base-2 points as numerators over `2^bits`; the verifiers take
/// one so that a faulty generator can be substituted.
pub trait DyadicGenerator: Sync {
    /// Numerator of the `m`-th point over `2^bits`, `m < 2^bits`.
    fn numerator(&self, m: u64, bits: u32) -> u64;
}

/// The van der Corput sequence itself.
#[derive(Clone, Copy, Debug, Default)]
pub struct VanDerCorput;

impl DyadicGenerator for VanDerCorput {
    fn numerator(&self, m: u64, bits: u32) -> u64 {
        bit_reverse(m, bits)
    }
}

/// Sorted numerators of `x_0 = 0, x_1, …, x_n` over `2^K`.
pub fn sorted_numerators(generator: &dyn DyadicGenerator, n: u64) -> (Vec<u64>, u64) {
    let bits = bit_length(n);
    let mut xs: Vec<u64> = (0..=n).map(|m| generator.numerator(m, bits)).collect();
    xs.sort_unstable();
    (xs, 1 << bits)
}

/// Cyclic span `x_{i+r} − x_i` in grid units.
#[inline]
fn span(xs: &[u64], grid: u64, i: usize, r: usize) -> u64 {
    let len = xs.len();
    let j = i + r;
    if j < len {
        xs[j] - xs[i]
    } else {
        xs[j - len] + grid - xs[i]
    }
}

/// A failed instance of a window inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowViolation {
    pub n: u64,
    pub r: u64,
    pub i: u64,
    pub detail: String,
}

/// Checks `x_r ≤ x_{i+r} − x_i ≤ 1 − x_{n+1−r}` for every cyclic `i`.
pub fn verify_main_lemma(n: u64, r: u64) -> bool {
    main_lemma_violations_with(&VanDerCorput, n, r..=r, 1).is_empty()
}

/// All violations for `r` in `rs`, stopping after `limit` of them.
pub fn main_lemma_violations_with(
    generator: &dyn DyadicGenerator,
    n: u64,
    rs: std::ops::RangeInclusive<u64>,
    limit: usize,
) -> Vec<WindowViolation> {
    let (xs, grid) = sorted_numerators(generator, n);
    let mut out = Vec::new();
    for r in rs {
        if r == 0 || r > n {
            continue;
        }
        let ru = r as usize;
        let lower = xs[ru];
        let upper = grid - xs[(n + 1 - r) as usize];
        for i in 0..xs.len() {
            let w = span(&xs, grid, i, ru);
            if w < lower || w > upper {
                out.push(WindowViolation {
                    n,
                    r,
                    i: i as u64,
                    detail: format!("x_(i+r) − x_i = {w}/{grid} outside [{lower}/{grid}, {upper}/{grid}]"),
                });
                if out.len() >= limit {
                    return out;
                }
            }
        }
    }
    out
}

/// Starting positions `i` with `x_{i+r} − x_i = x_r`.
pub fn main_lemma_equality_positions(n: u64, r: u64) -> Vec<u64> {
    let (xs, grid) = sorted_numerators(&VanDerCorput, n);
    (0..xs.len())
        .filter(|&i| span(&xs, grid, i, r as usize) == xs[r as usize])
        .map(|i| i as u64)
        .collect()
}

/// Checks that for every `x_t = a/2^{k+1}` with `a` odd and
/// `k = ⌊log₂ n⌋`, `x_{t+r} − x_t ≥ x_{t+r−1} − x_{t−1}`.
pub fn verify_shift_lemma(n: u64, r: u64) -> bool {
    shift_lemma_violations_with(&VanDerCorput, n, r..=r, 1).is_empty()
}

pub fn shift_lemma_violations_with(
    generator: &dyn DyadicGenerator,
    n: u64,
    rs: std::ops::RangeInclusive<u64>,
    limit: usize,
) -> Vec<WindowViolation> {
    let (xs, grid) = sorted_numerators(generator, n);
    // k + 1 = bit length of n, which is the grid exponent
    let len = xs.len();
    let qualifying: Vec<usize> = (0..len).filter(|&t| xs[t] % 2 == 1).collect();
    let mut out = Vec::new();
    for r in rs {
        if r == 0 || r > n {
            continue;
        }
        let ru = r as usize;
        for &t in &qualifying {
            let here = span(&xs, grid, t, ru);
            let before = span(&xs, grid, (t + len - 1) % len, ru);
            if here < before {
                out.push(WindowViolation {
                    n,
                    r,
                    i: t as u64,
                    detail: format!("x_(t+r) − x_t = {here}/{grid} < {before}/{grid}"),
                });
                if out.len() >= limit {
                    return out;
                }
            }
        }
    }
    out
}

/// Number of points `x_t = odd/2^{k+1}` the shift lemma quantifies over.
pub fn shift_lemma_support(n: u64) -> usize {
    let (xs, _) = sorted_numerators(&VanDerCorput, n);
    xs.iter().filter(|&&x| x % 2 == 1).count()
}

/// `2^{k−a−1} · x_{2^k + m·2^{k−a−1}} = x_m + 2^{−(a+2)}` for all
/// `1 ≤ m < 2^{a+1}`, with `x_m` the `m`-th raw sequence value.
pub fn verify_self_similarity(k: u32, a: u32) -> bool {
    self_similarity_failures_with(&VanDerCorput, k, a).is_empty()
}

/// Values of `m` for which the identity fails.
pub fn self_similarity_failures_with(generator: &dyn DyadicGenerator, k: u32, a: u32) -> Vec<u64> {
    assert!(a < k && k < 40, "self-similarity needs 2^(a+1) ≤ 2^k");
    let value = |m: u64| -> Fraction {
        let bits = bit_length(m);
        Ratio::new(generator.numerator(m, bits) as i64, 1i64 << bits)
    };
    let step = 1u64 << (k - a - 1);
    (1..1u64 << (a + 1))
        .filter(|&m| {
            let lhs = value((1 << k) + m * step) * step as i64;
            let rhs = value(m) + Ratio::new(1, 1i64 << (a + 2));
            lhs != rhs
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equispaced_prefixes_hold_with_equality() {
        for k in 1..=7u32 {
            let n = (1u64 << k) - 1;
            for r in 1..=n {
                assert!(verify_main_lemma(n, r));
                assert_eq!(main_lemma_equality_positions(n, r).len() as u64, n + 1);
            }
        }
    }

    #[test]
    fn window_53_of_660() {
        assert!(verify_main_lemma(660, 53));
        let eq = main_lemma_equality_positions(660, 53);
        assert_eq!(eq[0], 0);
        assert!(eq.len() > 1);
        let (xs, grid) = sorted_numerators(&VanDerCorput, 660);
        assert_eq!(Ratio::new(xs[53] as i64, grid as i64), Ratio::new(5, 64));
    }

    #[test]
    fn small_main_lemma_sweep() {
        for n in 1..=200u64 {
            assert!(main_lemma_violations_with(&VanDerCorput, n, 1..=n, 1).is_empty(), "n={n}");
        }
    }

    #[test]
    fn shift_lemma_five_points() {
        // 0, 1/8, 1/4, 1/2, 5/8, 3/4: qualifying points 1/8 and 5/8
        assert_eq!(shift_lemma_support(5), 2);
        assert!(verify_shift_lemma(5, 1));
        for n in 1..=200u64 {
            assert!(shift_lemma_violations_with(&VanDerCorput, n, 1..=n, 1).is_empty(), "n={n}");
        }
    }

    #[test]
    fn shift_lemma_on_full_prefixes_is_not_vacuous() {
        // n = 2^k − 1 has k' = k − 1, and half of its points are odd/2^k
        assert_eq!(shift_lemma_support(7), 4);
        assert!((1..=7).all(|r| verify_shift_lemma(7, r)));
    }

    #[test]
    fn self_similarity_raw_indexing() {
        // k = 2, a = 0, m = 1: index 2^2 + 2 = 6, x_6 = 3/8, 2·3/8 = 1/2 + 1/4
        assert!(verify_self_similarity(2, 0));
        assert!(verify_self_similarity(10, 3));
        for k in 1..=14 {
            for a in 0..k {
                assert!(verify_self_similarity(k, a), "k={k} a={a}");
            }
        }
    }

    #[test]
    fn self_similarity_sorted_indexing_fails() {
        // reading x_m as the m-th smallest of the first 2^k + m·2^(k−a−1)
        // points breaks the identity already at k = 2, a = 0, m = 1
        let n = 6u64;
        let (xs, grid) = sorted_numerators(&VanDerCorput, n);
        let x6 = Ratio::new(xs[6] as i64, grid as i64);
        let x1 = Ratio::new(xs[1] as i64, grid as i64);
        assert_ne!(x6 * 2, x1 + Ratio::new(1, 4));
    }
}
