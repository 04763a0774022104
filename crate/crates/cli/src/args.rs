use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use stickbreak_core::sequences::SequenceKind;
use stickbreak_core::sweep::{parse_values, FitQuantity, OutputFormat, SweepConfig};

#[derive(Debug, Parser)]
#[command(name = "stickbreak", version, about = "Gap, window and discrepancy statistics of stick-breaking sequences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sorted prefix points with exact and float coordinates.
    Generate(SweepArgs),
    /// Circular gaps of each prefix.
    Gaps(SweepArgs),
    /// Shortest and longest sums of r consecutive gaps.
    Windows(SweepArgs),
    /// Extreme point counts in intervals of length r/n.
    Discrepancy(SweepArgs),
    /// Pair correlation F_N(s); `--r` (or `--s`) lists the scales s.
    Paircorr(SweepArgs),
    /// Run every lemma verifier and print a JSON report.
    Verify(VerifyArgs),
    /// Fit the constant of a logarithmic bound over a sweep.
    Fit(FitArgs),
    /// Running maxima of the scaled extreme gaps of the log sequence.
    Theorem1(Theorem1Args),
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// TOML file with any of: kind, n, r, origin, format, out, jobs.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// vdc2, vdc:<base>, kronecker-phi or debruijn-log.
    #[arg(long)]
    pub kind: Option<SequenceKind>,
    /// Prefix lengths, e.g. `1000`, `2,4,8`, `1..=100:3`, `pow2(4..=12)`.
    #[arg(long)]
    pub n: Option<String>,
    /// Window sizes (or pair-correlation scales), same syntax as --n.
    #[arg(long, alias = "s")]
    pub r: Option<String>,
    /// Include the origin as an extra point.
    #[arg(long, overrides_with = "no_origin")]
    pub origin: bool,
    #[arg(long, overrides_with = "origin")]
    pub no_origin: bool,
    #[arg(long)]
    pub format: Option<OutputFormat>,
    /// Output file (standard output when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    kind: Option<SequenceKind>,
    n: Option<toml::Value>,
    r: Option<toml::Value>,
    origin: Option<bool>,
    format: Option<OutputFormat>,
    out: Option<PathBuf>,
    jobs: Option<usize>,
}

/// Anything the user can fix on the command line; exits with status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn value_list(v: &toml::Value) -> Result<String> {
    match v {
        toml::Value::String(s) => Ok(s.clone()),
        toml::Value::Integer(i) => Ok(i.to_string()),
        toml::Value::Array(items) => items
            .iter()
            .map(value_list)
            .collect::<Result<Vec<_>>>()
            .map(|parts| parts.join(",")),
        other => Err(usage(format!("expected a list or range, got {other}"))),
    }
}

fn read_config(path: &Path) -> Result<ConfigFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("{}", path.display()))?;
    toml::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

impl SweepArgs {
    /// Flags override the config file; the origin defaults to off.
    pub fn resolve(&self, r_required: bool) -> Result<SweepConfig> {
        let file = match &self.config {
            Some(path) => read_config(path)?,
            None => ConfigFile::default(),
        };
        let kind = self.kind.or(file.kind).ok_or_else(|| usage("--kind is required"))?;
        let n_spec = match (&self.n, &file.n) {
            (Some(s), _) => s.clone(),
            (None, Some(v)) => value_list(v)?,
            (None, None) => return Err(usage("--n is required")),
        };
        let r_spec = match (&self.r, &file.r) {
            (Some(s), _) => Some(s.clone()),
            (None, Some(v)) => Some(value_list(v)?),
            (None, None) => None,
        };
        let n_values = parse_values(&n_spec).map_err(|e| usage(format!("--n: {e}")))?;
        let r_values = match r_spec {
            Some(s) => parse_values(&s).map_err(|e| usage(format!("--r: {e}")))?,
            None if r_required => return Err(usage("--r is required")),
            None => Vec::new(),
        };
        let include_origin = if self.origin {
            true
        } else if self.no_origin {
            false
        } else {
            file.origin.unwrap_or(false)
        };
        let config = SweepConfig {
            kind,
            n_values,
            r_values,
            include_origin,
            format: self.format.or(file.format).unwrap_or_default(),
            out: self.out.clone().or(file.out),
            jobs: self.jobs.or(file.jobs),
        };
        if r_required {
            config.validate().map_err(|e| usage(e.to_string()))?;
        } else if config.n_values.first() == Some(&0) {
            return Err(usage("--n values must be positive"));
        }
        Ok(config)
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest level for the bit-level lemmas.
    #[arg(long, default_value_t = 8)]
    pub t_max: u32,
    /// Largest prefix length for the window lemmas.
    #[arg(long, default_value_t = 1024)]
    pub n_max: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// ratio_bound, discrepancy_bound or paircorr_bound.
    #[arg(long)]
    pub quantity: FitQuantity,
    /// Fit rows from an existing sweep table instead of running one.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Also fit over n ≤ n_max/2 and report the largest relative change.
    #[arg(long)]
    pub stability: bool,
    #[command(flatten)]
    pub sweep: SweepArgs,
}

#[derive(Debug, Args)]
pub struct Theorem1Args {
    #[arg(long, default_value = "1e6")]
    pub n_max: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
