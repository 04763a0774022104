use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;

use super::config::OutputFormat;
use crate::error::{Error, Result};

fn io_err(path: &Path, source: io::Error) -> Error {
    Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Writes rows as CSV (one header line) or as a JSON array.
pub fn write_rows_to<T: Serialize, W: Write>(rows: &[T], format: OutputFormat, writer: W, path: &Path) -> Result<()> {
    match format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(writer);
            for row in rows {
                w.serialize(row).map_err(|source| Error::Csv {
                    path: path.to_path_buf(),
                    source,
                })?;
            }
            w.flush().map_err(|e| io_err(path, e))
        }
        OutputFormat::Json => {
            let mut writer = writer;
            serde_json::to_writer_pretty(&mut writer, rows).map_err(|source| Error::Json {
                path: path.to_path_buf(),
                source,
            })?;
            writeln!(writer).map_err(|e| io_err(path, e))
        }
    }
}

/// Writes to `out`, or to standard output when it is `None`.
pub fn write_rows<T: Serialize>(rows: &[T], format: OutputFormat, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => {
            let file = File::create(path).map_err(|e| io_err(path, e))?;
            write_rows_to(rows, format, BufWriter::new(file), path)
        }
        None => write_rows_to(rows, format, io::stdout().lock(), &PathBuf::from("<stdout>")),
    }
}

pub fn read_rows<T: DeserializeOwned>(path: &Path, format: OutputFormat) -> Result<Vec<T>> {
    let file = File::open(path).map_err(|e| io_err(path, e))?;
    match format {
        OutputFormat::Csv => csv::Reader::from_reader(BufReader::new(file))
            .deserialize()
            .collect::<std::result::Result<Vec<T>, _>>()
            .map_err(|source| Error::Csv {
                path: path.to_path_buf(),
                source,
            }),
        OutputFormat::Json => serde_json::from_reader(BufReader::new(file)).map_err(|source| Error::Json {
            path: path.to_path_buf(),
            source,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::SequenceKind;
    use crate::stats::WindowRow;
    use crate::sweep::{run_discrepancy_sweep, run_paircorr_sweep, run_ratio_sweep, SweepConfig};
    use crate::stats::{DiscrepancyReport, PairCorrelationReport, WindowReport};

    fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(rows: &[T], format: OutputFormat) {
        let dir = std::env::temp_dir().join(format!("stickbreak-io-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(format!("rows-{}.{format}", rows.len()));
        write_rows(rows, format, Some(&path)).unwrap();
        let back: Vec<T> = read_rows(&path, format).unwrap();
        assert_eq!(back, rows);
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn sweep_tables_round_trip() {
        for kind in [SequenceKind::VDC2, SequenceKind::KroneckerGolden, SequenceKind::DeBruijnErdosLog] {
            let config = SweepConfig::new(kind, vec![40, 41, 97], vec![1, 2, 7, 33], false).unwrap();
            let windows: Vec<WindowReport> = run_ratio_sweep(&config).unwrap();
            let rows: Vec<WindowRow> = windows.iter().map(WindowRow::from).collect();
            let disc: Vec<DiscrepancyReport> = run_discrepancy_sweep(&config).unwrap();
            let pc: Vec<PairCorrelationReport> = run_paircorr_sweep(&config).unwrap();
            for format in [OutputFormat::Csv, OutputFormat::Json] {
                round_trip(&rows, format);
                round_trip(&disc, format);
                round_trip(&pc, format);
            }
            round_trip(&windows, OutputFormat::Json);
        }
    }

    #[test]
    fn csv_headers() {
        let config = SweepConfig::new(SequenceKind::VDC2, vec![8], vec![2], false).unwrap();
        let mut buf = Vec::new();
        let rows: Vec<WindowRow> = run_ratio_sweep(&config).unwrap().iter().map(WindowRow::from).collect();
        write_rows_to(&rows, OutputFormat::Csv, &mut buf, Path::new("mem")).unwrap();
        assert!(String::from_utf8(buf).unwrap().starts_with("kind,n,r,min_sum,max_sum,ratio_float\n"));
        let mut buf = Vec::new();
        write_rows_to(&run_discrepancy_sweep(&config).unwrap(), OutputFormat::Csv, &mut buf, Path::new("mem")).unwrap();
        assert!(String::from_utf8(buf).unwrap().starts_with("kind,n,r,max_count,min_count,max_abs_dev\n"));
        let mut buf = Vec::new();
        write_rows_to(&run_paircorr_sweep(&config).unwrap(), OutputFormat::Csv, &mut buf, Path::new("mem")).unwrap();
        assert!(String::from_utf8(buf).unwrap().starts_with("kind,N,s,F_value\n"));
    }

    #[test]
    fn missing_file_names_the_path() {
        let err = read_rows::<WindowRow>(Path::new("/nonexistent/x.csv"), OutputFormat::Csv).unwrap_err();
        assert!(err.to_string().contains("/nonexistent/x.csv"));
    }
}
