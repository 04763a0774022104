mod args;

use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::Parser;
use serde::{Deserialize, Serialize};
use stickbreak_core::exact::{ArcScalar, Quantity};
use stickbreak_core::lemmas::{all_passed, verify_all};
use stickbreak_core::sequences::build_prefix;
use stickbreak_core::stats::{gap_vector, DiscrepancyReport, PairCorrelationReport, WindowRow};
use stickbreak_core::sweep::{
    max_relative_change, parse_values, profile, read_rows, run_discrepancy_sweep, run_paircorr_sweep,
    run_ratio_sweep, theorem1_constants, write_rows, FitAccumulator, FitQuantity, FitResult, FitSample,
    OutputFormat, SweepConfig,
};
use stickbreak_core::{with_prefix, Error};

use args::{Cli, Command, FitArgs, SweepArgs, UsageError};

/// One circular gap, starting at the given sorted position.
#[derive(Debug, Serialize)]
struct GapRow {
    kind: String,
    n: u64,
    sorted_pos: u64,
    length: Quantity,
    length_float: f64,
}

#[derive(Debug, Serialize, Deserialize)]
struct Stability {
    n_max: u64,
    fit: FitResult,
    max_relative_change: f64,
}

#[derive(Debug, Serialize, Deserialize)]
struct FitReport {
    fit: FitResult,
    stability: Option<Stability>,
}

/// Some verifier found a counterexample; exits with status 1.
#[derive(Debug)]
struct VerificationFailed;

impl std::fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("verification failed")
    }
}

impl std::error::Error for VerificationFailed {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<VerificationFailed>() => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if e.is::<UsageError>() {
        return 2;
    }
    match e.downcast_ref::<Error>() {
        Some(
            Error::InvalidWindow { .. }
            | Error::InvalidArgument(_)
            | Error::InvalidRange(_)
            | Error::MalformedBits(_)
            | Error::Parse(_)
            | Error::InsufficientData(_)
            | Error::DuplicatePoint { .. },
        ) => 2,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Generate(a) => generate(&a),
        Command::Gaps(a) => gaps(&a),
        Command::Windows(a) => {
            let config = a.resolve(true)?;
            let reports = run_ratio_sweep(&config)?;
            match config.format {
                OutputFormat::Csv => {
                    let rows: Vec<WindowRow> = reports.iter().map(WindowRow::from).collect();
                    emit(&rows, &config)
                }
                OutputFormat::Json => emit(&reports, &config),
            }
        }
        Command::Discrepancy(a) => {
            let config = a.resolve(true)?;
            emit(&run_discrepancy_sweep(&config)?, &config)
        }
        Command::Paircorr(a) => {
            let config = a.resolve(true)?;
            emit(&run_paircorr_sweep(&config)?, &config)
        }
        Command::Verify(a) => {
            let reports = verify_all(a.t_max, a.n_max);
            write_rows(&reports, OutputFormat::Json, a.out.as_deref())?;
            if all_passed(&reports) {
                Ok(())
            } else {
                Err(VerificationFailed.into())
            }
        }
        Command::Fit(a) => fit(&a),
        Command::Theorem1(a) => {
            let n_max = match parse_values(&a.n_max)?.as_slice() {
                [n] => *n,
                _ => bail!(UsageError("--n-max takes a single value".into())),
            };
            let record = theorem1_constants(n_max)?;
            write_json(&record, a.out.as_deref())
        }
    }
}

fn emit<T: Serialize>(rows: &[T], config: &SweepConfig) -> Result<()> {
    Ok(write_rows(rows, config.format, config.out.as_deref())?)
}

fn write_json<T: Serialize>(value: &T, out: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match out {
        Some(path) => std::fs::write(path, text + "\n").map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?,
        None => {
            use std::io::Write;
            if let Err(e) = writeln!(std::io::stdout().lock(), "{text}") {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    return Err(e.into());
                }
            }
        }
    }
    Ok(())
}

fn generate(a: &SweepArgs) -> Result<()> {
    let config = a.resolve(false)?;
    let rows = config.install(|| -> Result<Vec<_>> {
        let mut rows = Vec::new();
        for &n in &config.n_values {
            rows.extend(build_prefix(config.kind, n, config.include_origin)?.rows());
        }
        Ok(rows)
    })??;
    emit(&rows, &config)
}

fn gaps(a: &SweepArgs) -> Result<()> {
    let config = a.resolve(false)?;
    let mut rows = Vec::new();
    for &n in &config.n_values {
        let prefix = build_prefix(config.kind, n, config.include_origin)?;
        with_prefix!(&prefix, p => {
            let g = gap_vector(p);
            rows.extend(g.gaps().iter().enumerate().map(|(i, x)| GapRow {
                kind: config.kind.to_string(),
                n,
                sorted_pos: i as u64,
                length: x.to_quantity(),
                length_float: x.to_f64(),
            }));
        });
    }
    emit(&rows, &config)
}

fn fit(a: &FitArgs) -> Result<()> {
    let quantity = a.quantity;
    let mut full = FitAccumulator::new(quantity);
    let mut half = FitAccumulator::new(quantity);
    let samples = match &a.input {
        Some(path) => samples_from_file(path, quantity, a.sweep.format)?,
        None => samples_from_sweep(&a.sweep.resolve(true)?, quantity)?,
    };
    let n_max = samples.iter().map(|s| s.n).max().unwrap_or(0);
    for s in samples {
        full.push(s);
        if 2 * s.n <= n_max {
            half.push(s);
        }
    }
    let fit = full.finish()?;
    let stability = if a.stability {
        let half_fit = half.finish()?;
        Some(Stability {
            n_max: n_max / 2,
            max_relative_change: max_relative_change(&half_fit, &fit),
            fit: half_fit,
        })
    } else {
        None
    };
    let out = a.sweep.out.as_deref();
    write_json(&FitReport { fit, stability }, out)
}

fn samples_from_sweep(config: &SweepConfig, quantity: FitQuantity) -> Result<Vec<FitSample>> {
    let mut samples = Vec::new();
    config.install(|| -> Result<()> {
        let (ns, rs, origin) = (&config.n_values, &config.r_values, config.include_origin);
        match quantity {
            FitQuantity::RatioBound => profile::window_ratios(config.kind, ns, rs, origin, |n, r, value| {
                samples.push(FitSample { n, r, value })
            })?,
            FitQuantity::DiscrepancyBound => {
                profile::discrepancies(config.kind, ns, rs, origin, |d| samples.push(FitSample::from(&d)))?
            }
            FitQuantity::PaircorrBound => {
                for p in run_paircorr_sweep(config)? {
                    samples.push(FitSample::try_from(&p)?);
                }
            }
        }
        Ok(())
    })??;
    Ok(samples)
}

fn samples_from_file(path: &Path, quantity: FitQuantity, format: Option<OutputFormat>) -> Result<Vec<FitSample>> {
    let format = format.unwrap_or(match path.extension().and_then(|e| e.to_str()) {
        Some("json") => OutputFormat::Json,
        _ => OutputFormat::Csv,
    });
    Ok(match quantity {
        FitQuantity::RatioBound => read_rows::<WindowRow>(path, format)?
            .iter()
            .map(|w| FitSample {
                n: w.n,
                r: w.r,
                value: w.ratio_float,
            })
            .collect(),
        FitQuantity::DiscrepancyBound => read_rows::<DiscrepancyReport>(path, format)?
            .iter()
            .map(FitSample::from)
            .collect(),
        FitQuantity::PaircorrBound => read_rows::<PairCorrelationReport>(path, format)?
            .iter()
            .map(FitSample::try_from)
            .collect::<Result<Vec<_>, _>>()?,
    })
}
