use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{ArcScalar, FloatValue};

/// Prefix lengths below this are grown but not scored: `n·shortest` falls
/// towards its limit from above, so early terms would dominate its maximum.
pub const THEOREM1_BURN_IN: u64 = 1000;

const TIE_THRESHOLD: f64 = 8.881_784_197_001_252e-16; // 2^-50

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Theorem1Record {
    pub n_min: u64,
    pub n_max: u64,
    pub limsup_n_times_longest: f64,
    pub limsup_n_times_shortest: f64,
    pub limsup_ratio: f64,
    /// Absolute error bound on each of the two `n·gap` maxima.
    pub n_times_gap_error: f64,
    /// Absolute error bound on the ratio maximum.
    pub ratio_error: f64,
}

fn arc(a: FloatValue, b: FloatValue) -> FloatValue {
    if b > a {
        b - a
    } else {
        b + FloatValue::one() - a
    }
}

/// Running maxima of `n·(longest gap)`, `n·(shortest gap)` and
/// `longest/shortest` for the first `n` points of `log₂(2k − 1) mod 1`,
/// over `THEOREM1_BURN_IN ≤ n ≤ n_max`.
pub fn theorem1_constants(n_max: u64) -> Result<Theorem1Record> {
    if n_max < THEOREM1_BURN_IN {
        return Err(Error::InvalidArgument(format!(
            "n_max = {n_max} is below the burn-in of {THEOREM1_BURN_IN}"
        )));
    }
    let mut points: BTreeSet<FloatValue> = BTreeSet::new();
    let mut gaps: BTreeMap<FloatValue, u32> = BTreeMap::new();
    let (mut best_long, mut best_short, mut best_ratio) = (0f64, 0f64, 0f64);
    let (mut long_err, mut ratio_err) = (0f64, 0f64);
    // each gap is a difference of two stored coordinates plus one rounding
    let gap_err = 3.0 * FloatValue::ERROR_BOUND;
    for n in 1..=n_max {
        let p = FloatValue::log2_mod1(2 * n - 1);
        if points.is_empty() {
            gaps.insert(FloatValue::one(), 1);
        } else {
            let a = *points.range(..p).next_back().or(points.last()).expect("nonempty");
            let b = *points.range(p..).next().or(points.first()).expect("nonempty");
            let old = arc(a, b);
            let slot = gaps.get_mut(&old).expect("tracked gap");
            *slot -= 1;
            if *slot == 0 {
                gaps.remove(&old);
            }
            for g in [arc(a, p), arc(p, b)] {
                if g.to_f64() < TIE_THRESHOLD {
                    return Err(Error::PrecisionWarning(format!(
                        "point {n} lies within 2^-50 of a neighbour"
                    )));
                }
                *gaps.entry(g).or_insert(0) += 1;
            }
        }
        points.insert(p);
        if n < THEOREM1_BURN_IN {
            continue;
        }
        let longest = gaps.last_key_value().expect("gaps").0.to_f64();
        let shortest = gaps.first_key_value().expect("gaps").0.to_f64();
        let nf = n as f64;
        best_long = best_long.max(nf * longest);
        best_short = best_short.max(nf * shortest);
        best_ratio = best_ratio.max(longest / shortest);
        long_err = long_err.max(nf * gap_err);
        ratio_err = ratio_err.max(longest / shortest * 2.0 * gap_err / shortest);
    }
    Ok(Theorem1Record {
        n_min: THEOREM1_BURN_IN,
        n_max,
        limsup_n_times_longest: best_long,
        limsup_n_times_shortest: best_short,
        limsup_ratio: best_ratio,
        n_times_gap_error: long_err,
        ratio_error: ratio_err,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        // the first n points are log₂ y mod 1 for y in [n, 2n), so the gaps
        // are log₂((y+1)/y) and the wrap log₂(2n/(2n−1))
        let rec = theorem1_constants(4000).unwrap();
        let long = |n: f64| n * (1.0 + 1.0 / n).log2();
        let short = |n: f64| n * (2.0 * n / (2.0 * n - 1.0)).log2();
        assert!((rec.limsup_n_times_longest - long(4000.0)).abs() < 1e-12);
        assert!((rec.limsup_n_times_shortest - short(1000.0)).abs() < 1e-12);
        let ratio = (1.0 + 1.0 / 4000f64).log2() / (8000.0 / 7999f64).log2();
        assert!((rec.limsup_ratio - ratio).abs() < 1e-9);
    }

    #[test]
    fn maxima_grow_with_n_max() {
        let a = theorem1_constants(2000).unwrap();
        let b = theorem1_constants(3000).unwrap();
        assert!(b.limsup_n_times_longest >= a.limsup_n_times_longest);
        assert!(b.limsup_n_times_shortest >= a.limsup_n_times_shortest);
        assert!(b.limsup_ratio >= a.limsup_ratio);
    }

    #[test]
    fn burn_in_required() {
        assert!(matches!(theorem1_constants(999), Err(Error::InvalidArgument(_))));
    }
}
