use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::stats::{DiscrepancyReport, PairCorrelationReport, WindowReport};

/// Which bound a constant is fitted for; each maps a raw statistic at scale
/// `r` onto the scale of the constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FitQuantity {
    /// `(ratio − 1)·r / ln r`
    RatioBound,
    /// `max_abs_dev / ln r`
    DiscrepancyBound,
    /// `|F_N(s) − 2s| / ln s`
    PaircorrBound,
}

impl FitQuantity {
    pub fn transform(&self, r: u64, value: f64) -> f64 {
        let r_f = r as f64;
        let log = r_f.ln();
        match self {
            FitQuantity::RatioBound => (value - 1.0) * r_f / log,
            FitQuantity::DiscrepancyBound => value / log,
            FitQuantity::PaircorrBound => (value - 2.0 * r_f).abs() / log,
        }
    }
}

impl fmt::Display for FitQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FitQuantity::RatioBound => "ratio_bound",
            FitQuantity::DiscrepancyBound => "discrepancy_bound",
            FitQuantity::PaircorrBound => "paircorr_bound",
        })
    }
}

impl FromStr for FitQuantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "ratio_bound" | "ratio" => Ok(FitQuantity::RatioBound),
            "discrepancy_bound" | "discrepancy" => Ok(FitQuantity::DiscrepancyBound),
            "paircorr_bound" | "paircorr" => Ok(FitQuantity::PaircorrBound),
            _ => Err(Error::Parse(format!("unknown fit quantity {s:?}"))),
        }
    }
}

/// One observation: the raw statistic (ratio, `max_abs_dev`, or `F_N(s)`)
/// at prefix length `n` and scale `r` (or `s`).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitSample {
    pub n: u64,
    pub r: u64,
    pub value: f64,
}

impl From<&WindowReport> for FitSample {
    fn from(w: &WindowReport) -> Self {
        FitSample {
            n: w.n,
            r: w.r,
            value: w.ratio_float,
        }
    }
}

impl From<&DiscrepancyReport> for FitSample {
    fn from(d: &DiscrepancyReport) -> Self {
        FitSample {
            n: d.n,
            r: d.r,
            value: d.max_abs_dev as f64,
        }
    }
}

impl TryFrom<&PairCorrelationReport> for FitSample {
    type Error = Error;

    fn try_from(p: &PairCorrelationReport) -> Result<Self> {
        if !p.s.denom().eq(&1.into()) || p.s.signum() <= 0 {
            return Err(Error::InvalidArgument(format!("fits need a positive integer s, got {}", p.s)));
        }
        let s = p.s.numer().try_into().map_err(|_| Error::InvalidArgument(format!("s = {} too large", p.s)))?;
        Ok(FitSample {
            n: p.n,
            r: s,
            value: p.value_f64(),
        })
    }
}

/// Largest transformed value seen at one `r`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PerScale {
    pub r: u64,
    pub c: f64,
    /// Prefix length attaining `c` (the first one on ties).
    pub n: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub quantity: FitQuantity,
    pub fitted_c: f64,
    pub r_range: Vec<u64>,
    pub n_max: u64,
    /// `fitted_c − c_r` for each `r` in `r_range`.
    pub residuals: Vec<f64>,
    pub per_r: Vec<PerScale>,
}

impl FitResult {
    pub fn at(&self, r: u64) -> Option<&PerScale> {
        self.per_r.iter().find(|p| p.r == r)
    }
}

/// Streaming form of [`fit_constant`] for sweeps too large to hold.
#[derive(Clone, Debug)]
pub struct FitAccumulator {
    quantity: FitQuantity,
    per_r: BTreeMap<u64, PerScale>,
    n_max: u64,
}

impl FitAccumulator {
    pub fn new(quantity: FitQuantity) -> Self {
        FitAccumulator {
            quantity,
            per_r: BTreeMap::new(),
            n_max: 0,
        }
    }

    /// Rows with `r < 2` carry no logarithmic scale and are skipped.
    pub fn push(&mut self, sample: FitSample) {
        if sample.r < 2 {
            return;
        }
        self.n_max = self.n_max.max(sample.n);
        let c = self.quantity.transform(sample.r, sample.value);
        let entry = self.per_r.entry(sample.r).or_insert(PerScale {
            r: sample.r,
            c,
            n: sample.n,
        });
        if c > entry.c {
            *entry = PerScale {
                r: sample.r,
                c,
                n: sample.n,
            };
        }
    }

    pub fn finish(&self) -> Result<FitResult> {
        if self.per_r.len() < 3 {
            return Err(Error::InsufficientData(format!(
                "{} distinct r >= 2; at least 3 are needed",
                self.per_r.len()
            )));
        }
        let per_r: Vec<PerScale> = self.per_r.values().copied().collect();
        let fitted_c = per_r.iter().map(|p| p.c).fold(f64::NEG_INFINITY, f64::max);
        Ok(FitResult {
            quantity: self.quantity,
            fitted_c,
            r_range: per_r.iter().map(|p| p.r).collect(),
            n_max: self.n_max,
            residuals: per_r.iter().map(|p| fitted_c - p.c).collect(),
            per_r,
        })
    }
}

/// Smallest `c` with `transform(r, value) ≤ c` for every row, `r ≥ 2`.
pub fn fit_constant(rows: &[FitSample], quantity: FitQuantity) -> Result<FitResult> {
    let mut acc = FitAccumulator::new(quantity);
    rows.iter().for_each(|&s| acc.push(s));
    acc.finish()
}

/// Largest relative change of the per-`r` constants between two fits,
/// over the scales both cover.
pub fn max_relative_change(before: &FitResult, after: &FitResult) -> f64 {
    before
        .per_r
        .iter()
        .filter_map(|b| after.at(b.r).map(|a| (b.c, a.c)))
        .map(|(b, a)| {
            let scale = a.abs().max(b.abs());
            if scale == 0.0 {
                0.0
            } else {
                (a - b).abs() / scale
            }
        })
        .fold(0.0, f64::max)
}
