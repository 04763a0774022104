use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{ArcScalar, Quantity};
use crate::sequences::{Prefix, SequenceKind};

/// Circular gaps of a sorted prefix; `gaps[i]` runs from point `i` to point
/// `i + 1` and the last gap wraps through 1.
#[derive(Clone, Debug)]
pub struct GapVector<S> {
    kind: SequenceKind,
    n: u64,
    gaps: Vec<S>,
    total: S,
    // offsets[i] = points[i] - points[0], so window sums need no accumulation
    offsets: Vec<S>,
}

pub fn gap_vector<S: ArcScalar>(prefix: &Prefix<S>) -> GapVector<S> {
    let pts = prefix.coords();
    assert!(!pts.is_empty(), "gap vector of an empty prefix");
    let first = pts[0];
    let mut gaps: Vec<S> = pts.windows(2).map(|w| w[1] - w[0]).collect();
    gaps.push(S::one() - pts[pts.len() - 1] + first);
    let total = gaps.iter().fold(S::zero(), |acc, &g| acc + g);
    GapVector {
        kind: prefix.kind(),
        n: prefix.n(),
        gaps,
        total,
        offsets: pts.iter().map(|&x| x - first).collect(),
    }
}

impl<S: ArcScalar> GapVector<S> {
    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn gaps(&self) -> &[S] {
        &self.gaps
    }

    pub fn total(&self) -> S {
        self.total
    }

    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    /// Bound on `|total − 1|`; zero for exact kinds.
    pub fn total_error_bound(&self) -> f64 {
        2.0 * self.gaps.len() as f64 * S::error_bound()
    }

    pub fn distinct_lengths(&self) -> usize {
        let mut g = self.gaps.clone();
        g.sort();
        g.dedup();
        g.len()
    }

    /// Sum of the `r` gaps starting at gap `start` (`r ≤ len`).
    pub fn window_sum(&self, start: usize, r: usize) -> S {
        let len = self.len();
        let end = start + r;
        if end < len {
            self.offsets[end] - self.offsets[start]
        } else {
            S::one() + self.offsets[end - len] - self.offsets[start]
        }
    }
}

/// Extremal sums of `r` consecutive gaps; positions are the first gap index
/// of the earliest window attaining each extreme.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WindowReport {
    pub kind: SequenceKind,
    pub n: u64,
    pub r: u64,
    pub min_sum: Quantity,
    pub min_pos: u64,
    pub max_sum: Quantity,
    pub max_pos: u64,
    pub ratio: Quantity,
    pub ratio_float: f64,
}

/// CSV line of a window sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WindowRow {
    pub kind: SequenceKind,
    pub n: u64,
    pub r: u64,
    pub min_sum: Quantity,
    pub max_sum: Quantity,
    pub ratio_float: f64,
}

impl From<&WindowReport> for WindowRow {
    fn from(w: &WindowReport) -> Self {
        WindowRow {
            kind: w.kind,
            n: w.n,
            r: w.r,
            min_sum: w.min_sum.clone(),
            max_sum: w.max_sum.clone(),
            ratio_float: w.ratio_float,
        }
    }
}

impl WindowReport {
    pub(crate) fn from_extremes<S: ArcScalar>(
        kind: SequenceKind,
        n: u64,
        r: u64,
        (min_sum, min_pos): (S, u64),
        (max_sum, max_pos): (S, u64),
    ) -> Self {
        let ratio = S::quotient(&max_sum, &min_sum);
        WindowReport {
            kind,
            n,
            r,
            min_sum: min_sum.to_quantity(),
            min_pos,
            max_sum: max_sum.to_quantity(),
            max_pos,
            ratio_float: ratio.to_f64(),
            ratio,
        }
    }
}

pub fn window_extremes<S: ArcScalar>(gaps: &GapVector<S>, r: u64) -> Result<WindowReport> {
    let len = gaps.len();
    if r == 0 || r > len as u64 {
        return Err(Error::InvalidWindow {
            r,
            bound: format!("1..={len}"),
        });
    }
    let r_us = r as usize;
    let mut min = (gaps.window_sum(0, r_us), 0u64);
    let mut max = min;
    for i in 1..len {
        let s = gaps.window_sum(i, r_us);
        if s < min.0 {
            min = (s, i as u64);
        }
        if s > max.0 {
            max = (s, i as u64);
        }
    }
    Ok(WindowReport::from_extremes(gaps.kind, gaps.n, r, min, max))
}
