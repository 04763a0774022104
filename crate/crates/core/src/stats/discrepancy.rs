use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::ArcScalar;
use crate::sequences::{Prefix, SequenceKind};

/// Which intervals `[x, x + r/n)` are scanned.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum IntervalMode {
    /// Every start `x` on the circle; intervals wrap through 0.
    #[default]
    Circular,
    /// Only `0 ≤ x ≤ 1 − r/n`.
    NonWrapping,
}

/// Extreme point counts over intervals of length `r/n`. Every stored point
/// is counted, including the origin when the prefix carries one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub kind: SequenceKind,
    pub n: u64,
    pub r: u64,
    pub max_count: u64,
    pub min_count: u64,
    pub max_abs_dev: u64,
}

impl DiscrepancyReport {
    pub(crate) fn new(kind: SequenceKind, n: u64, r: u64, max_count: u64, min_count: u64) -> Self {
        DiscrepancyReport {
            kind,
            n,
            r,
            max_count,
            min_count,
            max_abs_dev: max_count.abs_diff(r).max(min_count.abs_diff(r)),
        }
    }
}

/// Circular counts over half-open intervals `[x, x + r/n)`.
pub fn local_discrepancy<S: ArcScalar>(prefix: &Prefix<S>, r: u64) -> Result<DiscrepancyReport> {
    local_discrepancy_with(prefix, r, IntervalMode::Circular)
}

pub fn local_discrepancy_with<S: ArcScalar>(
    prefix: &Prefix<S>,
    r: u64,
    mode: IntervalMode,
) -> Result<DiscrepancyReport> {
    let n = prefix.n();
    if r == 0 || r >= n {
        return Err(Error::InvalidWindow {
            r,
            bound: format!("1..{n}"),
        });
    }
    let (r_i, n_i) = (to_i64(r)?, to_i64(n)?);
    let (max_count, min_count) = match mode {
        IntervalMode::Circular => circular_counts(prefix.coords(), r_i, n_i),
        IntervalMode::NonWrapping => flat_counts(prefix.coords(), r_i, n_i),
    };
    Ok(DiscrepancyReport::new(prefix.kind(), n, r, max_count, min_count))
}

fn to_i64(v: u64) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::InvalidArgument(format!("{v} exceeds i64")))
}

// The count of [x, x+L) only drops when x passes a point, and only rises when
// x + L reaches one. Hence the maximum is attained at x = some point (the
// interval [x_i, x_i + L)) and the minimum just after some point (the
// interval (x_i, x_i + L]). Both are read off with a two-pointer sweep.
fn circular_counts<S: ArcScalar>(pts: &[S], r: i64, n: i64) -> (u64, u64) {
    let len = pts.len();
    let forward = |i: usize, j: usize| -> S {
        if j < len {
            pts[j] - pts[i]
        } else {
            S::one() + pts[j - len] - pts[i]
        }
    };
    let (mut lt, mut le) = (1usize, 1usize);
    let (mut max_count, mut min_count) = (0u64, u64::MAX);
    for i in 0..len {
        lt = lt.max(i + 1);
        le = le.max(i + 1);
        while lt < i + len && forward(i, lt).cmp_ratio(r, n) == Ordering::Less {
            lt += 1;
        }
        while le < i + len && forward(i, le).cmp_ratio(r, n) != Ordering::Greater {
            le += 1;
        }
        max_count = max_count.max((lt - i) as u64);
        min_count = min_count.min((le - i - 1) as u64);
    }
    (max_count, min_count)
}

fn flat_counts<S: ArcScalar>(pts: &[S], r: i64, n: i64) -> (u64, u64) {
    // number of points strictly below / at most the threshold
    let below = |pred: &dyn Fn(&S) -> bool| pts.partition_point(|p| pred(p));
    let right_edge = |x: &S| x.cmp_ratio(n - r, n);

    // x = 0 and x = 1 − L are the boundary candidates
    let at_zero = below(&|p| p.cmp_ratio(r, n) == Ordering::Less) as u64;
    let at_end = (pts.len() - below(&|p| right_edge(p) == Ordering::Less)) as u64;
    let (mut max_count, mut min_count) = (at_zero.max(at_end), at_zero.min(at_end));

    for (i, &q) in pts.iter().enumerate() {
        match right_edge(&q) {
            Ordering::Greater => break,
            edge => {
                let hi = below(&|p| *p < q || (*p - q).cmp_ratio(r, n) == Ordering::Less);
                max_count = max_count.max((hi - i) as u64);
                if edge == Ordering::Less {
                    let hi = below(&|p| (*p <= q) || (*p - q).cmp_ratio(r, n) != Ordering::Greater);
                    min_count = min_count.min((hi - i - 1) as u64);
                }
            }
        }
    }
    (max_count, min_count)
}
