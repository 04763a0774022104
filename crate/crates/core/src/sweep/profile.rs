//! Streaming window and discrepancy statistics over many prefix lengths.
//!
//! Base-2 van der Corput and golden Kronecker prefixes go through the
//! counting engines; everything else is sorted and swept directly. Callbacks
//! receive rows in increasing `n`, then increasing `r`.

use rayon::prelude::*;

use crate::engines::{golden_windows, DifferenceOrder, DyadicGrid, GoldenCounter};
use crate::error::{Error, Result};
use crate::sequences::{build_prefix, SequenceKind};
use crate::stats::{gap_vector, local_discrepancy, window_extremes, DiscrepancyReport};
use crate::with_prefix;

const CHUNK: usize = 1024;

fn check_lists(ns: &[u64], rs: &[u64]) -> Result<()> {
    if !ns.windows(2).all(|w| w[0] < w[1]) || !rs.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::InvalidArgument("n and r lists must be strictly increasing".into()));
    }
    if ns.first() == Some(&0) {
        return Err(Error::InvalidArgument("prefix length must be positive".into()));
    }
    if rs.first() == Some(&0) {
        return Err(Error::InvalidWindow {
            r: 0,
            bound: ">= 1".into(),
        });
    }
    Ok(())
}

/// Computes `rows(n)` for every `n` in parallel chunks and hands the results
/// to `sink` in order.
fn ordered<T: Send>(
    ns: &[u64],
    rows: impl Fn(u64) -> Result<Vec<T>> + Sync,
    mut sink: impl FnMut(T),
) -> Result<()> {
    for chunk in ns.chunks(CHUNK) {
        let done: Vec<Result<Vec<T>>> = chunk.par_iter().map(|&n| rows(n)).collect();
        for batch in done {
            batch?.into_iter().for_each(&mut sink);
        }
    }
    Ok(())
}

/// `(n, r, max/min)` for the extreme sums of `r` consecutive gaps. Pairs
/// with `r` above the number of gaps are skipped.
pub fn window_ratios(
    kind: SequenceKind,
    ns: &[u64],
    rs: &[u64],
    origin: bool,
    mut sink: impl FnMut(u64, u64, f64),
) -> Result<()> {
    check_lists(ns, rs)?;
    let Some(&r_max) = rs.last() else {
        return Ok(());
    };
    match kind {
        SequenceKind::VanDerCorput { base: 2 } if origin => ordered(
            ns,
            |n| {
                let spans = DyadicGrid::new(n).window_spans(r_max);
                Ok(rs
                    .iter()
                    .filter(|&&r| r <= n + 1)
                    .map(|&r| {
                        let (lo, hi) = spans[r as usize];
                        (n, r, hi as f64 / lo as f64)
                    })
                    .collect())
            },
            |(n, r, x)| sink(n, r, x),
        ),
        SequenceKind::KroneckerGolden => {
            // the gap structure of {mφ}, m0 ≤ m ≤ n, depends only on n − m0
            let m0 = u64::from(!origin);
            let mut order = DifferenceOrder::new(0);
            for &n in ns {
                if n < m0 {
                    continue;
                }
                while order.span() < n - m0 {
                    order.grow();
                }
                let points = n - m0 + 1;
                let w = golden_windows(&order, r_max);
                for &r in rs.iter().filter(|&&r| r <= points) {
                    let (lo, hi) = (w.shortest[r as usize], w.longest[r as usize]);
                    sink(n, r, hi.to_f64() / lo.to_f64());
                }
            }
            Ok(())
        }
        _ => ordered(
            ns,
            |n| {
                let prefix = build_prefix(kind, n, origin)?;
                with_prefix!(&prefix, p => {
                    let g = gap_vector(p);
                    rs.iter()
                        .filter(|&&r| r as usize <= g.len())
                        .map(|&r| window_extremes(&g, r).map(|w| (n, r, w.ratio_float)))
                        .collect::<Result<Vec<_>>>()
                })
            },
            |(n, r, x)| sink(n, r, x),
        ),
    }
}

/// Discrepancy counts for every `n` in `ns` and `r < n` in `rs`.
pub fn discrepancies(
    kind: SequenceKind,
    ns: &[u64],
    rs: &[u64],
    origin: bool,
    mut sink: impl FnMut(DiscrepancyReport),
) -> Result<()> {
    check_lists(ns, rs)?;
    match kind {
        SequenceKind::VanDerCorput { base: 2 } => ordered(
            ns,
            |n| {
                let grid = DyadicGrid::new(n);
                Ok(rs
                    .iter()
                    .filter(|&&r| r < n)
                    .map(|&r| {
                        let (max, min) = grid.discrepancy_counts(r, origin);
                        DiscrepancyReport::new(kind, n, r, max, min)
                    })
                    .collect())
            },
            &mut sink,
        ),
        SequenceKind::KroneckerGolden => {
            let mut counter = GoldenCounter::new(origin, rs);
            for &n in ns {
                if n < 2 {
                    continue;
                }
                counter.advance_to(n);
                for (&r, (max, min)) in rs.iter().zip(counter.counts()) {
                    if r < n {
                        sink(DiscrepancyReport::new(kind, n, r, max, min));
                    }
                }
            }
            Ok(())
        }
        _ => ordered(
            ns,
            |n| {
                let prefix = build_prefix(kind, n, origin)?;
                with_prefix!(&prefix, p => rs
                    .iter()
                    .filter(|&&r| r < n)
                    .map(|&r| local_discrepancy(p, r))
                    .collect::<Result<Vec<_>>>())
            },
            &mut sink,
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn generic_ratios(kind: SequenceKind, ns: &[u64], rs: &[u64], origin: bool) -> Vec<(u64, u64, f64)> {
        let mut out = Vec::new();
        for &n in ns {
            let prefix = build_prefix(kind, n, origin).unwrap();
            with_prefix!(&prefix, p => {
                let g = gap_vector(p);
                for &r in rs.iter().filter(|&&r| r as usize <= g.len()) {
                    out.push((n, r, window_extremes(&g, r).unwrap().ratio_float));
                }
            });
        }
        out
    }

    #[test]
    fn engine_ratios_match_generic() {
        let ns: Vec<u64> = (1..=300).collect();
        let rs = [1u64, 2, 3, 5, 8, 16, 31];
        for kind in [SequenceKind::VDC2, SequenceKind::KroneckerGolden] {
            for origin in [true, false] {
                let mut fast = Vec::new();
                window_ratios(kind, &ns, &rs, origin, |n, r, x| fast.push((n, r, x))).unwrap();
                let slow = generic_ratios(kind, &ns, &rs, origin);
                assert_eq!(fast.len(), slow.len(), "{kind} {origin}");
                for (a, b) in fast.iter().zip(&slow) {
                    assert_eq!((a.0, a.1), (b.0, b.1));
                    assert!((a.2 - b.2).abs() <= 1e-12 * b.2, "{kind} {a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn engine_discrepancy_matches_generic() {
        let ns: Vec<u64> = (2..=300).collect();
        let rs = [1u64, 2, 4, 7, 32];
        for kind in [SequenceKind::VDC2, SequenceKind::KroneckerGolden] {
            for origin in [true, false] {
                let mut fast = Vec::new();
                discrepancies(kind, &ns, &rs, origin, |d| fast.push(d)).unwrap();
                let mut slow = Vec::new();
                for &n in &ns {
                    let prefix = build_prefix(kind, n, origin).unwrap();
                    for &r in rs.iter().filter(|&&r| r < n) {
                        slow.push(with_prefix!(&prefix, p => local_discrepancy(p, r).unwrap()));
                    }
                }
                assert_eq!(fast, slow, "{kind} origin={origin}");
            }
        }
    }

    #[test]
    fn generic_fallback_for_other_bases() {
        let mut rows = Vec::new();
        window_ratios(SequenceKind::VanDerCorput { base: 3 }, &[8, 26], &[1, 2], true, |n, r, x| rows.push((n, r, x)))
            .unwrap();
        assert_eq!(rows.len(), 4);
        // 26 points plus the origin are the full grid of 1/27
        assert_eq!(rows[2].2, 1.0);
        assert_eq!(rows[3].2, 1.0);
    }

    #[test]
    fn unsorted_lists_rejected() {
        assert!(window_ratios(SequenceKind::VDC2, &[5, 3], &[1], true, |_, _, _| {}).is_err());
        assert!(discrepancies(SequenceKind::VDC2, &[5], &[0], true, |_| {}).is_err());
    }
}
