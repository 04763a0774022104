use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequences::SequenceKind;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(Error::Parse(format!("unknown format {s:?} (csv or json)"))),
        }
    }
}

/// One sweep over `n_values × r_values`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub kind: SequenceKind,
    pub n_values: Vec<u64>,
    pub r_values: Vec<u64>,
    pub include_origin: bool,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl SweepConfig {
    pub fn new(kind: SequenceKind, mut n_values: Vec<u64>, mut r_values: Vec<u64>, include_origin: bool) -> Result<Self> {
        n_values.sort_unstable();
        n_values.dedup();
        r_values.sort_unstable();
        r_values.dedup();
        let config = SweepConfig {
            kind,
            n_values,
            r_values,
            include_origin,
            format: OutputFormat::Csv,
            out: None,
            jobs: None,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        let (Some(&n_min), Some(&r_max)) = (self.n_values.first(), self.r_values.last()) else {
            return Err(Error::InvalidArgument("n and r lists must be nonempty".into()));
        };
        if self.r_values[0] == 0 {
            return Err(Error::InvalidWindow {
                r: 0,
                bound: format!("< {n_min}"),
            });
        }
        if r_max >= n_min {
            return Err(Error::InvalidWindow {
                r: r_max,
                bound: format!("< min n = {n_min}"),
            });
        }
        if !self.n_values.windows(2).all(|w| w[0] < w[1]) || !self.r_values.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument("n and r lists must be strictly increasing".into()));
        }
        if self.jobs == Some(0) {
            return Err(Error::InvalidArgument("--jobs must be positive".into()));
        }
        Ok(())
    }

    /// Runs `op` on a pool with `jobs` workers (or the global pool).
    pub fn install<T: Send>(&self, op: impl FnOnce() -> T + Send) -> Result<T> {
        match self.jobs {
            None => Ok(op()),
            Some(jobs) => rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map(|pool| pool.install(op))
                .map_err(|e| Error::InvalidArgument(format!("cannot start {jobs} workers: {e}"))),
        }
    }
}
