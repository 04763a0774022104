//! Stick-breaking sequences on the circle and their short-scale statistics.
//!
//! Points of the base-2 van der Corput sequence, the golden-ratio Kronecker
//! sequence `{kφ}` and the logarithmic sequence `log₂(2k−1) mod 1` are
//! generated with exact (or error-bounded) coordinates. On top of them the
//! crate computes circular gaps, extremal sums of `r` consecutive gaps,
//! point counts in all intervals of length `r/n`, pair correlation, and
//! executable checks of the combinatorial lemmas that govern these
//! quantities.

pub mod engines;
pub mod error;
pub mod exact;
pub mod lemmas;
pub mod sequences;
pub mod stats;
pub mod sweep;

pub use error::{Error, Result};
