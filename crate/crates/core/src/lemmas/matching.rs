use serde::{Deserialize, Serialize};

use super::split::{split_index, CanonicalInterval};
use crate::error::{Error, Result};

/// Bijection from the elements of `[x'_g, x'_{g+j}]` onto those of
/// `[0, x'_j]` on the equispaced prefix of `2^t − 1` points. Elements are
/// named by the sorted position of their left endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementMatching {
    pub level: u32,
    pub start: u64,
    pub len: u64,
    /// `(source, target)` sorted by source.
    pub pairs: Vec<(u64, u64)>,
}

impl ElementMatching {
    /// First pair violating the bijection or the split order, if any.
    pub fn violation(&self) -> Option<String> {
        if self.pairs.len() as u64 != self.len {
            return Some(format!("{} pairs for {} elements", self.pairs.len(), self.len));
        }
        let mut seen = vec![false; self.len as usize];
        for (i, &(s, t)) in self.pairs.iter().enumerate() {
            if s != self.start + i as u64 {
                return Some(format!("source {s} out of place"));
            }
            if t >= self.len || std::mem::replace(&mut seen[t as usize], true) {
                return Some(format!("target {t} reused or outside [0, {})", self.len));
            }
            let split = |e| split_index(CanonicalInterval { level: self.level, index: e });
            if split(t) > split(s) {
                return Some(format!("target {t} is split after source {s}"));
            }
        }
        None
    }

    pub fn is_valid(&self) -> bool {
        self.violation().is_none()
    }
}

/// Builds the matching by the even/odd recursion.
pub fn build_element_matching(t: u32, g: u64, j: u64) -> Result<ElementMatching> {
    if t >= 40 || g + j > (1u64 << t) - 1 {
        return Err(Error::InvalidRange(format!(
            "elements [{g}, {}) do not fit a prefix of 2^{t} − 1 points",
            g + j
        )));
    }
    let mut pairs = Vec::with_capacity(j as usize);
    matching_into(t, g, j, &mut pairs);
    pairs.sort_unstable();
    Ok(ElementMatching {
        level: t,
        start: g,
        len: j,
        pairs,
    })
}

// Element s at level t is even (s = 2u) or odd (s = 2u + 1) and maps to
// element u at level t − 1; split order is preserved inside each class and
// every even element is split before every odd one.
fn matching_into(t: u32, g: u64, j: u64, out: &mut Vec<(u64, u64)>) {
    if j == 0 {
        return;
    }
    if g == 0 || t == 0 {
        out.extend((0..j).map(|s| (g + s, s)));
        return;
    }
    let even_start = g.div_ceil(2);
    let odd_start = g / 2;
    let evens = (g + j).div_ceil(2) - even_start;
    let odds = j - evens;
    let mut sub = Vec::new();
    if evens == j.div_ceil(2) {
        matching_into(t - 1, even_start, evens, &mut sub);
        out.extend(sub.drain(..).map(|(s, u)| (2 * s, 2 * u)));
        matching_into(t - 1, odd_start, odds, &mut sub);
        out.extend(sub.drain(..).map(|(s, u)| (2 * s + 1, 2 * u + 1)));
    } else {
        // j = 2c + 1 with c evens and c + 1 odds in the source: evens go to
        // the evens of [0, x'_{j−2}], odds to the odds of [0, x'_{j+1}], and
        // the odd element sent to position j is moved to the even j − 1
        matching_into(t - 1, even_start, evens, &mut sub);
        out.extend(sub.drain(..).map(|(s, u)| (2 * s, 2 * u)));
        matching_into(t - 1, odd_start, odds, &mut sub);
        out.extend(sub.drain(..).map(|(s, u)| {
            let target = 2 * u + 1;
            (2 * s + 1, if target == j { j - 1 } else { target })
        }));
    }
}
