//! Structure-exploiting counters for the two exact sequences, used by the
//! sweeps where the generic sorted-prefix path would be quadratic.

pub mod dyadic;
pub mod golden;

pub use dyadic::{DyadicGrid, Extremes};
pub use golden::{golden_windows, DifferenceOrder, GoldenCounter, GoldenWindows};
