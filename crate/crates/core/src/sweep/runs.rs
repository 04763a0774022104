use rayon::prelude::*;

use super::config::SweepConfig;
use super::profile;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::sequences::build_prefix;
use crate::stats::{
    gap_vector, pair_correlation, window_extremes, DiscrepancyReport, PairCorrelationReport, WindowReport,
};
use crate::with_prefix;

/// Window extremes for every `(n, r)` of the config, in `(n, r)` order.
pub fn run_ratio_sweep(config: &SweepConfig) -> Result<Vec<WindowReport>> {
    config.validate()?;
    config.install(|| {
        let per_n: Vec<Result<Vec<WindowReport>>> = config
            .n_values
            .par_iter()
            .map(|&n| {
                let prefix = build_prefix(config.kind, n, config.include_origin)?;
                with_prefix!(&prefix, p => {
                    let g = gap_vector(p);
                    config.r_values.iter().map(|&r| window_extremes(&g, r)).collect()
                })
            })
            .collect();
        flatten(per_n)
    })?
}

/// Discrepancy counts for every `(n, r)` of the config.
pub fn run_discrepancy_sweep(config: &SweepConfig) -> Result<Vec<DiscrepancyReport>> {
    config.validate()?;
    config.install(|| {
        let mut rows = Vec::new();
        profile::discrepancies(
            config.kind,
            &config.n_values,
            &config.r_values,
            config.include_origin,
            |d| rows.push(d),
        )?;
        Ok(rows)
    })?
}

/// `F_N(s)` for every `N` in `n_values` and integer `s` in `r_values`.
pub fn run_paircorr_sweep(config: &SweepConfig) -> Result<Vec<PairCorrelationReport>> {
    config.validate()?;
    if config.include_origin {
        return Err(Error::InvalidArgument("pair correlation sweeps run without the origin".into()));
    }
    config.install(|| {
        let per_n: Vec<Result<Vec<PairCorrelationReport>>> = config
            .n_values
            .par_iter()
            .map(|&n| {
                let prefix = build_prefix(config.kind, n, false)?;
                with_prefix!(&prefix, p => config
                    .r_values
                    .iter()
                    .map(|&s| pair_correlation(p, &Rational::from_integer(s)))
                    .collect())
            })
            .collect();
        flatten(per_n)
    })?
}

fn flatten<T>(per_n: Vec<Result<Vec<T>>>) -> Result<Vec<T>> {
    let mut out = Vec::new();
    for rows in per_n {
        out.extend(rows?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Quantity;
    use crate::sequences::SequenceKind;

    #[test]
    fn equispaced_ratios_are_one() {
        let ns = vec![7, 15, 31, 63];
        let config = SweepConfig::new(SequenceKind::VDC2, ns, vec![1, 2, 3, 6], true).unwrap();
        let rows = run_ratio_sweep(&config).unwrap();
        assert_eq!(rows.len(), 16);
        assert!(rows.iter().all(|w| w.ratio == Quantity::Rational(Rational::one())));
    }

    #[test]
    fn window_53_of_660() {
        let config = SweepConfig::new(SequenceKind::VDC2, vec![660], vec![53], true).unwrap();
        let rows = run_ratio_sweep(&config).unwrap();
        assert_eq!(rows[0].min_sum, Quantity::Rational(Rational::new(5, 64)));
    }

    #[test]
    fn row_order_does_not_depend_on_workers() {
        let mut config =
            SweepConfig::new(SequenceKind::KroneckerGolden, (40..=90).collect(), vec![1, 5, 13], false).unwrap();
        config.jobs = Some(1);
        let one = (run_ratio_sweep(&config).unwrap(), run_paircorr_sweep(&config).unwrap());
        config.jobs = Some(4);
        let four = (run_ratio_sweep(&config).unwrap(), run_paircorr_sweep(&config).unwrap());
        assert_eq!(one, four);
        let keys: Vec<(u64, u64)> = one.0.iter().map(|w| (w.n, w.r)).collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn paircorr_needs_no_origin() {
        let config = SweepConfig::new(SequenceKind::VDC2, vec![64], vec![2], true).unwrap();
        assert!(matches!(run_paircorr_sweep(&config), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn discrepancy_rows_cover_the_grid() {
        let config = SweepConfig::new(SequenceKind::DeBruijnErdosLog, vec![10, 20], vec![1, 2, 3], false).unwrap();
        let rows = run_discrepancy_sweep(&config).unwrap();
        assert_eq!(rows.len(), 6);
    }
}
