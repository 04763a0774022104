//! Parameter sweeps, constant fitting and report files.

mod config;
mod fit;
mod io;
pub mod profile;
mod range;
mod runs;
mod theorem1;

pub use config::{OutputFormat, SweepConfig};
pub use fit::{fit_constant, max_relative_change, FitAccumulator, FitQuantity, FitResult, FitSample, PerScale};
pub use io::{read_rows, write_rows, write_rows_to};
pub use range::parse_values;
pub use runs::{run_discrepancy_sweep, run_paircorr_sweep, run_ratio_sweep};
pub use theorem1::{theorem1_constants, Theorem1Record, THEOREM1_BURN_IN};
