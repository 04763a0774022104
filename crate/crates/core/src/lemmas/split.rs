use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequences::bit_reverse;

/// The dyadic interval `[a/2^t, (a+1)/2^t]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalInterval {
    pub level: u32,
    pub index: u64,
}

impl CanonicalInterval {
    pub fn new(level: u32, index: u64) -> Result<Self> {
        if level >= 62 || index >= 1u64 << level {
            return Err(Error::InvalidRange(format!(
                "canonical interval index {index} at level {level}"
            )));
        }
        Ok(CanonicalInterval { level, index })
    }

    /// Left endpoint written with `level` binary digits after the point.
    pub fn from_bits(bits: &str) -> Result<Self> {
        let index = parse_bits(bits)?;
        CanonicalInterval::new(bits.len() as u32, index)
    }
}

fn parse_bits(bits: &str) -> Result<u64> {
    if bits.len() > 62 || !bits.bytes().all(|b| b == b'0' || b == b'1') {
        return Err(Error::MalformedBits(format!("{bits:?} is not a binary string")));
    }
    Ok(bits.bytes().fold(0, |acc, b| 2 * acc + (b - b'0') as u64))
}

/// Index of the first base-2 point strictly inside the interval; it lands
/// on the midpoint `(2a + 1)/2^{t+1}`.
pub fn split_index(interval: CanonicalInterval) -> u64 {
    bit_reverse(2 * interval.index + 1, interval.level + 1)
}

/// Whether the element with left endpoint `A0C` is split before the one at
/// `B1C`, endpoints given by their digits after the binary point.
pub fn verify_flip_order(t: u32, a: &str, b: &str, c: &str) -> Result<bool> {
    if a.len() != b.len() || a.len() + 1 + c.len() != t as usize {
        return Err(Error::MalformedBits(format!(
            "need |A| = |B| and |A| + 1 + |C| = {t}, got {:?}, {:?}, {:?}",
            a, b, c
        )));
    }
    let left = CanonicalInterval::from_bits(&format!("{a}0{c}"))?;
    let right = CanonicalInterval::from_bits(&format!("{b}1{c}"))?;
    Ok(split_index(left) < split_index(right))
}

/// Every `(A, B, C)` at total length `t` for which the flip order fails.
pub fn flip_order_failures(t: u32) -> Vec<(String, String, String)> {
    let mut failures = Vec::new();
    if t == 0 {
        return failures;
    }
    for p in 0..t {
        let q = t - 1 - p;
        for c in 0..1u64 << q {
            for a in 0..1u64 << p {
                for b in 0..1u64 << p {
                    // left endpoints A0C and B1C as numerators over 2^t
                    let left = (a << (q + 1)) | c;
                    let right = (b << (q + 1)) | (1 << q) | c;
                    let sl = split_index(CanonicalInterval { level: t, index: left });
                    let sr = split_index(CanonicalInterval { level: t, index: right });
                    if sl >= sr {
                        failures.push((bits(a, p), bits(b, p), bits(c, q)));
                    }
                }
            }
        }
    }
    failures
}

pub(crate) fn bits(value: u64, len: u32) -> String {
    (0..len)
        .rev()
        .map(|i| if value >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}
