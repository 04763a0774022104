use std::cmp::Ordering;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{ArcScalar, Rational};
use crate::sequences::{Prefix, SequenceKind};

/// `F_N(s)`: ordered pairs at circular distance at most `s/N`, over `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCorrelationReport {
    pub kind: SequenceKind,
    #[serde(rename = "N")]
    pub n: u64,
    pub s: Rational,
    #[serde(rename = "F_value")]
    pub value: Rational,
}

impl PairCorrelationReport {
    pub fn value_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

pub fn pair_correlation<S: ArcScalar>(prefix: &Prefix<S>, s: &Rational) -> Result<PairCorrelationReport> {
    if prefix.include_origin() {
        return Err(Error::InvalidArgument(
            "pair correlation is defined on sequence points only; build the prefix without the origin".into(),
        ));
    }
    if s.signum() <= 0 {
        return Err(Error::InvalidArgument(format!("scale s = {s} must be positive")));
    }
    let pts = prefix.coords();
    let big_n = pts.len() as u64;
    let count = ordered_pairs_within(pts, s)?;
    Ok(PairCorrelationReport {
        kind: prefix.kind(),
        n: big_n,
        s: s.clone(),
        value: Rational::new(count, big_n),
    })
}

fn ordered_pairs_within<S: ArcScalar>(pts: &[S], s: &Rational) -> Result<u64> {
    let len = pts.len();
    if len < 2 {
        return Ok(0);
    }
    // δ = s/N as num/den
    let num = s.numer().to_i64();
    let den = s.denom().to_i64().and_then(|d| d.checked_mul(len as i64));
    let (Some(num), Some(den)) = (num, den) else {
        return Err(Error::InvalidArgument(format!("scale s = {s} is too large to compare")));
    };
    let all = (len * (len - 1)) as u64;
    if 2 * num as i128 >= den as i128 {
        return Ok(all);
    }
    // δ < 1/2: each close unordered pair has exactly one forward gap ≤ δ
    let forward = |i: usize, j: usize| -> S {
        if j < len {
            pts[j] - pts[i]
        } else {
            S::one() + pts[j - len] - pts[i]
        }
    };
    let mut unordered = 0u64;
    let mut e = 1usize;
    for i in 0..len {
        e = e.max(i + 1);
        while e < i + len && forward(i, e).cmp_ratio(num, den) != Ordering::Greater {
            e += 1;
        }
        unordered += (e - i - 1) as u64;
    }
    Ok(2 * unordered)
}
