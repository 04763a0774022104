//! Counting engine for prefixes of `{mφ}`.
//!
//! For the points `{mφ}`, `m0 ≤ m ≤ n`, the arc from `{aφ}` to `{bφ}` has
//! length `{(b − a)φ}`, so every window question reduces to the set of
//! differences `d` with `|d| ≤ n − m0` ordered by `{dφ}`. With `u = a − m0`
//! the admissible differences are `−u ≤ d ≤ span − u`, and the point count of
//! an arc of length `δ` starting at `{aφ}` is
//! `#{p ≥ 0 : {pφ} ≤ δ, p ≤ span − u} + #{q > 0 : {−qφ} ≤ δ, q ≤ u}`.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use crate::exact::GoldenInt;

/// Differences `|d| ≤ span` keyed by `{dφ}`, extendable as the prefix grows.
#[derive(Clone, Debug)]
pub struct DifferenceOrder {
    span: u64,
    by_value: BTreeMap<GoldenInt, i64>,
}

impl DifferenceOrder {
    pub fn new(span: u64) -> Self {
        let mut order = DifferenceOrder {
            span: 0,
            by_value: BTreeMap::from([(GoldenInt::ZERO, 0)]),
        };
        while order.span < span {
            order.grow();
        }
        order
    }

    pub fn span(&self) -> u64 {
        self.span
    }

    /// Admits `±(span + 1)`.
    pub fn grow(&mut self) {
        self.span += 1;
        let d = self.span as i64;
        self.by_value.insert(GoldenInt::frac_of_multiple(d), d);
        self.by_value.insert(GoldenInt::frac_of_multiple(-d), -d);
    }

    /// `(value, d)` in increasing value, starting with `(0, 0)`.
    pub fn iter(&self) -> impl Iterator<Item = (GoldenInt, i64)> + '_ {
        self.by_value.iter().map(|(v, d)| (*v, *d))
    }
}

/// Range-add segment tree over compressed coordinates tracking the global
/// maximum and minimum.
struct RangeAdd {
    size: usize,
    max: Vec<i64>,
    min: Vec<i64>,
    lazy: Vec<i64>,
}

impl RangeAdd {
    fn new(size: usize) -> Self {
        let cap = 4 * size.max(1);
        RangeAdd {
            size,
            max: vec![0; cap],
            min: vec![0; cap],
            lazy: vec![0; cap],
        }
    }

    fn add(&mut self, lo: usize, hi: usize) {
        if lo < hi {
            self.add_rec(1, 0, self.size, lo, hi);
        }
    }

    fn add_rec(&mut self, node: usize, l: usize, r: usize, lo: usize, hi: usize) {
        if hi <= l || r <= lo {
            return;
        }
        if lo <= l && r <= hi {
            self.max[node] += 1;
            self.min[node] += 1;
            self.lazy[node] += 1;
            return;
        }
        let mid = (l + r) / 2;
        self.add_rec(2 * node, l, mid, lo, hi);
        self.add_rec(2 * node + 1, mid, r, lo, hi);
        self.max[node] = self.lazy[node] + self.max[2 * node].max(self.max[2 * node + 1]);
        self.min[node] = self.lazy[node] + self.min[2 * node].min(self.min[2 * node + 1]);
    }

    fn max(&self) -> i64 {
        self.max[1]
    }

    fn min(&self) -> i64 {
        self.min[1]
    }
}

/// Shortest and longest sums of `c` consecutive gaps for `c ≤ c_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenWindows {
    pub shortest: Vec<GoldenInt>,
    pub longest: Vec<GoldenInt>,
}

/// Window extremes for the points `{mφ}`, `m0 ≤ m ≤ m0 + span`.
/// `c_max` is capped at the number of gaps.
pub fn golden_windows(order: &DifferenceOrder, c_max: u64) -> GoldenWindows {
    let span = order.span();
    let points = span + 1;
    let c_max = c_max.min(points);
    let needed = c_max.min(points - 1);
    // the longest window of c gaps needs about 2c differences; retry with
    // more when that guess falls short
    let mut take = (4 * (needed as usize + 1) + 16).min(2 * span as usize + 1);
    loop {
        let items: Vec<(GoldenInt, i64)> = order.iter().take(take).collect();
        if let Some(mut w) = run_windows(&items, span, needed) {
            if c_max == points {
                w.shortest.push(GoldenInt::ONE);
                w.longest.push(GoldenInt::ONE);
            }
            return w;
        }
        assert!(take < 2 * span as usize + 1, "window search exhausted all differences");
        take = (take * 2).min(2 * span as usize + 1);
    }
}

fn run_windows(items: &[(GoldenInt, i64)], span: u64, needed: u64) -> Option<GoldenWindows> {
    let span = span as i64;
    // u-ranges: p adds on [0, span − p], q = −d adds on [q, span]
    let mut cuts: Vec<i64> = vec![0, span + 1];
    for &(_, d) in items {
        cuts.push(if d >= 0 { span - d + 1 } else { -d });
    }
    cuts.sort_unstable();
    cuts.dedup();
    let segs = cuts.len() - 1;
    let idx = |x: i64| cuts.partition_point(|&c| c < x);
    let mut tree = RangeAdd::new(segs);
    let total = needed as usize + 1;
    let mut shortest = Vec::with_capacity(total);
    let mut longest = Vec::with_capacity(total);
    for &(v, d) in items {
        if d >= 0 {
            tree.add(0, idx(span - d + 1));
        } else {
            tree.add(idx(-d), segs);
        }
        while shortest.len() < total && tree.max() > shortest.len() as i64 {
            shortest.push(v);
        }
        while longest.len() < total && tree.min() > longest.len() as i64 {
            longest.push(v);
        }
        if longest.len() == total {
            return Some(GoldenWindows { shortest, longest });
        }
    }
    None
}

/// `⌊r / v⌋` for `0 < v < 1` in `ℤ[φ]`: the last prefix length `n` with
/// `n·v < r`.
fn expiry(v: GoldenInt, r: i64) -> u64 {
    let mut e = (r as f64 / v.to_f64()).floor() as i64;
    while v.times(e + 1).cmp_ratio(r, 1).is_lt() {
        e += 1;
    }
    while e > 0 && v.times(e).cmp_ratio(r, 1).is_gt() {
        e -= 1;
    }
    e as u64
}

/// Differences `d ≠ 0` with `{dφ} < r/n`, split by sign and sorted by size.
#[derive(Clone, Debug)]
struct ShortDifferences {
    r: i64,
    forward: Vec<i64>,
    backward: Vec<i64>,
    expiring: BinaryHeap<Reverse<(u64, i64)>>,
}

impl ShortDifferences {
    fn admit(&mut self, d: i64, n: u64) {
        let e = expiry(GoldenInt::frac_of_multiple(d), self.r);
        if e >= n {
            if d > 0 {
                self.forward.push(d);
            } else {
                self.backward.push(-d);
            }
            self.expiring.push(Reverse((e, d)));
        }
    }

    fn expire(&mut self, n: u64) {
        while let Some(&Reverse((e, d))) = self.expiring.peek() {
            if e >= n {
                break;
            }
            self.expiring.pop();
            let list = if d > 0 { &mut self.forward } else { &mut self.backward };
            let pos = list.binary_search(&d.abs()).expect("tracked difference");
            list.remove(pos);
        }
    }

    /// Extreme counts of `[x, x + r/n)` over all `x`.
    fn counts(&self, span: i64) -> (u64, u64) {
        let (p, q) = (&self.forward, &self.backward);
        // maximum: starts at u = 0 or u = q; the zero difference always counts
        let mut best = 1 + p.len() as u64;
        let mut below = p.len();
        for (j, &qq) in q.iter().enumerate() {
            while below > 0 && p[below - 1] > span - qq {
                below -= 1;
            }
            best = best.max(1 + below as u64 + j as u64 + 1);
        }
        // minimum of (x, x + r/n]: just after the forward list loses p,
        // at u = span − p + 1, visited in increasing u
        let mut worst = p.len() as u64;
        let mut qi = 0;
        for (i, &pp) in p.iter().enumerate().rev() {
            let u = span - pp + 1;
            while qi < q.len() && q[qi] <= u {
                qi += 1;
            }
            worst = worst.min(i as u64 + qi as u64);
        }
        (best, worst)
    }
}

/// Discrepancy counts for a growing prefix `{mφ}`, `m0 ≤ m ≤ n`, at
/// several fixed `r`.
#[derive(Clone, Debug)]
pub struct GoldenCounter {
    m0: u64,
    n: u64,
    tracks: Vec<ShortDifferences>,
}

impl GoldenCounter {
    /// Starts at `n = m0` (a single point); `rs` must be positive.
    pub fn new(origin: bool, rs: &[u64]) -> Self {
        let m0 = if origin { 0 } else { 1 };
        GoldenCounter {
            m0,
            n: m0,
            tracks: rs
                .iter()
                .map(|&r| ShortDifferences {
                    r: r as i64,
                    forward: Vec::new(),
                    backward: Vec::new(),
                    expiring: BinaryHeap::new(),
                })
                .collect(),
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn advance(&mut self) {
        self.n += 1;
        let n = self.n;
        let span = (n - self.m0) as i64;
        for t in &mut self.tracks {
            t.expire(n);
            t.admit(span, n);
            t.admit(-span, n);
        }
    }

    pub fn advance_to(&mut self, n: u64) {
        while self.n < n {
            self.advance();
        }
    }

    /// `(max_count, min_count)` for each tracked `r`, at the current `n`.
    pub fn counts(&self) -> Vec<(u64, u64)> {
        let span = (self.n - self.m0) as i64;
        self.tracks.iter().map(|t| t.counts(span)).collect()
    }
}
