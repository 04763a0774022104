//! Counting engine for base-2 van der Corput prefixes.
//!
//! With `K` binary digits the first `n < 2^K` points (plus the origin) are
//! the cells `j` of the grid `2^-K ℤ` with `rev_K(j) ≤ n`. Splitting cells by
//! parity halves the grid and either fills every even cell (when the top bit
//! of the threshold is set) or empties every odd one, so extreme occupancy
//! counts over windows of `w` consecutive cells follow from two windows one
//! level down. The recursion yields the extremes and how many starts attain
//! them in `O(K)` per width.

use crate::sequences::{bit_length, bit_reverse};

/// Extreme occupancy over all circular windows of a fixed width.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Extremes {
    pub max: u64,
    pub max_starts: u64,
    pub min: u64,
    pub min_starts: u64,
}

impl Extremes {
    fn uniform(count: u64, starts: u64) -> Self {
        Extremes {
            max: count,
            max_starts: starts,
            min: count,
            min_starts: starts,
        }
    }

    fn shifted(self, by: u64) -> Self {
        Extremes {
            max: self.max + by,
            min: self.min + by,
            ..self
        }
    }

    fn union(self, other: Self) -> Self {
        let (max, max_starts) = match self.max.cmp(&other.max) {
            std::cmp::Ordering::Greater => (self.max, self.max_starts),
            std::cmp::Ordering::Less => (other.max, other.max_starts),
            std::cmp::Ordering::Equal => (self.max, self.max_starts + other.max_starts),
        };
        let (min, min_starts) = match self.min.cmp(&other.min) {
            std::cmp::Ordering::Less => (self.min, self.min_starts),
            std::cmp::Ordering::Greater => (other.min, other.min_starts),
            std::cmp::Ordering::Equal => (self.min, self.min_starts + other.min_starts),
        };
        Extremes {
            max,
            max_starts,
            min,
            min_starts,
        }
    }
}

/// Occupied cells of a base-2 prefix of length `n` on its natural grid.
#[derive(Clone, Debug)]
pub struct DyadicGrid {
    n: u64,
    bits: u32,
    // thresholds[k]: occupancy threshold at level k; level K is the full grid
    thresholds: Vec<u64>,
}

impl DyadicGrid {
    pub fn new(n: u64) -> Self {
        assert!(n >= 1 && n < 1 << 62, "grid size out of range");
        let bits = bit_length(n);
        let mut thresholds = vec![0; bits as usize + 1];
        let mut t = n;
        for k in (1..=bits).rev() {
            thresholds[k as usize] = t;
            let half = 1u64 << (k - 1);
            if t >= half {
                t -= half;
            }
        }
        thresholds[0] = t;
        DyadicGrid {
            n,
            bits,
            thresholds,
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Number of cells, `2^K`.
    pub fn size(&self) -> u64 {
        1 << self.bits
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Whether cell `j` holds a point (the origin counts when `origin`).
    pub fn occupied(&self, j: u64, origin: bool) -> bool {
        let m = bit_reverse(j & (self.size() - 1), self.bits);
        m <= self.n && (origin || m != 0)
    }

    fn top_bit_set(&self, k: u32) -> bool {
        self.thresholds[k as usize] >= 1 << (k - 1)
    }

    fn step(&self, k: u32, w: u64, down: impl Fn(u64) -> Extremes) -> Extremes {
        if w == 0 {
            return Extremes::uniform(0, 1 << k);
        }
        let (a, b) = (w.div_ceil(2), w / 2);
        if self.top_bit_set(k) {
            down(b).shifted(a).union(down(a).shifted(b))
        } else {
            down(a).union(down(b))
        }
    }

    /// Extremes over windows of `w` cells, counting the origin.
    pub fn extremes(&self, w: u64) -> Extremes {
        assert!(w <= self.size(), "window wider than the grid");
        // widths needed at level k form a range [lo, lo + 1]
        let mut ranges = vec![(0u64, 0u64); self.bits as usize + 1];
        ranges[self.bits as usize] = (w, w);
        for k in (1..=self.bits as usize).rev() {
            let (lo, hi) = ranges[k];
            ranges[k - 1] = (lo / 2, hi.div_ceil(2));
        }
        let base = |w: u64| Extremes::uniform(w, 1);
        let mut below: Vec<Extremes> = (ranges[0].0..=ranges[0].1).map(base).collect();
        for k in 1..=self.bits {
            let (lo, hi) = ranges[k as usize];
            let lo_below = ranges[k as usize - 1].0;
            let here: Vec<Extremes> = (lo..=hi)
                .map(|w| self.step(k, w, |v| below[(v - lo_below) as usize]))
                .collect();
            below = here;
        }
        below[0]
    }

    /// Extremes for every width `0..=cap` (counting the origin).
    pub fn all_extremes(&self, cap: u64) -> Vec<Extremes> {
        let cap = cap.min(self.size());
        let mut caps = vec![0u64; self.bits as usize + 1];
        caps[self.bits as usize] = cap;
        for k in (1..=self.bits as usize).rev() {
            caps[k - 1] = caps[k].div_ceil(2);
        }
        let mut below: Vec<Extremes> = (0..=caps[0]).map(|w| Extremes::uniform(w, 1)).collect();
        for k in 1..=self.bits {
            let here: Vec<Extremes> = (0..=caps[k as usize])
                .map(|w| self.step(k, w, |v| below[v as usize]))
                .collect();
            below = here;
        }
        below
    }

    /// Occupancy (origin counted) of the `w` windows that contain cell 0.
    fn windows_through_origin(&self, w: u64) -> impl Iterator<Item = u64> + '_ {
        let g = self.size();
        let start = g - w + 1;
        let mut count = (0..w).filter(|&i| self.occupied(start - 1 + i, true)).count() as u64;
        let mut s = start - 1;
        (0..w).map(move |_| {
            // slide from start s to s + 1
            count -= self.occupied(s, true) as u64;
            count += self.occupied(s + w, true) as u64;
            s += 1;
            count
        })
    }

    /// Largest point count over windows of `w ≥ 1` cells.
    pub fn max_count(&self, w: u64, origin: bool) -> u64 {
        let e = self.extremes(w);
        if origin {
            return e.max;
        }
        let through = self.windows_through_origin(w).filter(|&c| c == e.max).count() as u64;
        if e.max_starts > through {
            e.max
        } else {
            e.max - 1
        }
    }

    /// Smallest point count over windows of `w ≥ 1` cells.
    pub fn min_count(&self, w: u64, origin: bool) -> u64 {
        let e = self.extremes(w);
        if origin || !self.windows_through_origin(w).any(|c| c == e.min) {
            e.min
        } else {
            e.min - 1
        }
    }

    /// Extreme counts over the circular intervals `[x, x + r/n)`.
    pub fn discrepancy_counts(&self, r: u64, origin: bool) -> (u64, u64) {
        let scaled = r as u128 * self.size() as u128;
        let n = self.n as u128;
        let w_max = scaled.div_ceil(n) as u64;
        let w_min = (scaled / n) as u64;
        (self.max_count(w_max, origin), self.min_count(w_min, origin))
    }

    /// Shortest and longest sums of `r` consecutive gaps, in cells, for
    /// every `r ≤ r_max` (origin counted). Index 0 is unused.
    pub fn window_spans(&self, r_max: u64) -> Vec<(u64, u64)> {
        let g = self.size();
        let r_max = r_max.min(self.n + 1);
        let ext = self.all_extremes(2 * r_max + 2);
        let last = ext.len() as u64 - 1;
        let mut out = vec![(0, 0); r_max as usize + 1];
        let (mut c_lo, mut c_hi) = (0u64, 0u64);
        for r in 1..=r_max {
            if r == self.n + 1 {
                out[r as usize] = (g, g);
                continue;
            }
            // shortest span c with a window of c + 1 cells holding r + 1 points
            c_lo = c_lo.max(r);
            while ext[(c_lo + 1) as usize].max < r + 1 {
                c_lo += 1;
            }
            // longest c such that some window of c - 1 cells holds < r points
            while c_hi < last && ext[(c_hi + 1) as usize].min < r {
                c_hi += 1;
            }
            out[r as usize] = (c_lo, c_hi + 1);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(grid: &DyadicGrid, w: u64, origin: bool) -> (u64, u64, u64, u64) {
        let g = grid.size();
        let counts: Vec<u64> = (0..g)
            .map(|s| (s..s + w).filter(|&c| grid.occupied(c, origin)).count() as u64)
            .collect();
        let max = *counts.iter().max().unwrap();
        let min = *counts.iter().min().unwrap();
        let nmax = counts.iter().filter(|&&c| c == max).count() as u64;
        let nmin = counts.iter().filter(|&&c| c == min).count() as u64;
        (max, nmax, min, nmin)
    }

    #[test]
    fn recursion_matches_enumeration() {
        for n in 1..=140u64 {
            let grid = DyadicGrid::new(n);
            let all = grid.all_extremes(grid.size());
            for w in 0..=grid.size() {
                let e = grid.extremes(w);
                assert_eq!(e, all[w as usize]);
                assert_eq!((e.max, e.max_starts, e.min, e.min_starts), brute(&grid, w, true));
                if w >= 1 {
                    let (mx, _, mn, _) = brute(&grid, w, false);
                    assert_eq!((grid.max_count(w, false), grid.min_count(w, false)), (mx, mn), "n={n} w={w}");
                }
            }
        }
    }

    #[test]
    fn full_grid_windows() {
        let grid = DyadicGrid::new(7);
        assert_eq!(grid.size(), 8);
        assert_eq!(grid.extremes(3), Extremes::uniform(3, 8));
        let spans = grid.window_spans(8);
        assert!(spans[1..].iter().enumerate().all(|(i, &(lo, hi))| lo == i as u64 + 1 && hi == lo));
    }

    #[test]
    fn span_of_53_in_660() {
        let grid = DyadicGrid::new(660);
        assert_eq!(grid.size(), 1024);
        assert_eq!(grid.window_spans(53)[53].0, 80); // 5/64
    }
}
