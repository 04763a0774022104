//! Circular gap statistics on sorted prefixes.

mod discrepancy;
mod gaps;
mod paircorr;

pub use discrepancy::{local_discrepancy, local_discrepancy_with, DiscrepancyReport, IntervalMode};
pub use gaps::{gap_vector, window_extremes, GapVector, WindowReport, WindowRow};
pub use paircorr::{pair_correlation, PairCorrelationReport};
