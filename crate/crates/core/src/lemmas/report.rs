use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::fibonacci::{fibonacci_approximation_holds, fibonacci_coprime, zeckendorf};
use super::matching::build_element_matching;
use super::ordering::{
    main_lemma_violations_with, self_similarity_failures_with, shift_lemma_violations_with,
    DyadicGenerator, VanDerCorput,
};
use super::split::{flip_order_failures, split_index, CanonicalInterval};
use crate::sequences::radical_inverse_fraction;

/// Counterexamples kept per report.
pub const MAX_COUNTEREXAMPLES: usize = 50;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub case: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub lemma: String,
    pub parameter_range: String,
    pub all_passed: bool,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    fn from_failures(
        lemma: &str,
        parameter_range: String,
        failures: impl IntoIterator<Item = Counterexample>,
    ) -> Self {
        let counterexamples: Vec<_> = failures.into_iter().take(MAX_COUNTEREXAMPLES).collect();
        VerificationReport {
            lemma: lemma.to_string(),
            parameter_range,
            all_passed: counterexamples.is_empty(),
            counterexamples,
        }
    }
}

fn cx(case: String, detail: impl Into<String>) -> Counterexample {
    Counterexample {
        case,
        detail: detail.into(),
    }
}

/// Split index lands on the midpoint and no earlier point enters the
/// interval, for every level `t ≤ t_max`. Indices below `2^{t+1}` sit on the
/// grid `2^{-(t+1)}`, and the interior points are the odd numerators.
pub fn check_split_index(t_max: u32) -> VerificationReport {
    let t_max = t_max.min(24);
    let failures = (0..=t_max).flat_map(|t| {
        let mut first = vec![u64::MAX; 1 << t];
        for m in 1..1u64 << (t + 1) {
            let x = radical_inverse_fraction(m, 2) * (1i64 << (t + 1));
            let y = *x.numer() as u64;
            if y % 2 == 1 && first[(y / 2) as usize] == u64::MAX {
                first[(y / 2) as usize] = m;
            }
        }
        first.into_iter().enumerate().filter_map(move |(a, m)| {
            let s = split_index(CanonicalInterval { level: t, index: a as u64 });
            (s != m).then(|| cx(format!("t={t} a={a}"), format!("split index {s}, first entry {m}")))
        })
    });
    VerificationReport::from_failures("split_index", format!("t <= {t_max}"), failures)
}

pub fn check_flip_order(t_max: u32) -> VerificationReport {
    let failures: Vec<_> = (0..=t_max)
        .into_par_iter()
        .flat_map_iter(|t| {
            flip_order_failures(t)
                .into_iter()
                .map(move |(a, b, c)| cx(format!("t={t} A={a} B={b} C={c}"), "A0C not split before B1C"))
        })
        .collect();
    VerificationReport::from_failures("flip_order", format!("t <= {t_max}"), failures)
}

/// Every `(g, j)` for `t ≤ 8`; beyond that `j ≤ 32`.
pub fn check_matchings(t_max: u32) -> VerificationReport {
    let failures: Vec<_> = (0..=t_max.min(39))
        .flat_map(|t| {
            let top = (1u64 << t) - 1;
            let j_cap = if t <= 8 { top } else { 32 };
            (0..=top).flat_map(move |g| (0..=j_cap.min(top - g)).map(move |j| (t, g, j)))
        })
        .par_bridge()
        .filter_map(|(t, g, j)| {
            let m = build_element_matching(t, g, j).ok()?;
            m.violation().map(|v| cx(format!("t={t} g={g} j={j}"), v))
        })
        .collect();
    let mut failures = failures;
    failures.sort_by(|a, b| a.case.cmp(&b.case));
    VerificationReport::from_failures(
        "element_matching",
        format!("t <= {t_max}, all g + j <= 2^t - 1 (j <= 32 above t = 8)"),
        failures,
    )
}

pub fn check_main_lemma(generator: &dyn DyadicGenerator, n_max: u64) -> VerificationReport {
    let failures: Vec<_> = (1..=n_max)
        .into_par_iter()
        .flat_map_iter(|n| main_lemma_violations_with(generator, n, 1..=n, MAX_COUNTEREXAMPLES))
        .map(|v| cx(format!("n={} r={} i={}", v.n, v.r, v.i), v.detail))
        .collect();
    VerificationReport::from_failures("main_lemma", format!("1 <= r <= n <= {n_max}"), failures)
}

pub fn check_shift_lemma(generator: &dyn DyadicGenerator, n_max: u64) -> VerificationReport {
    let failures: Vec<_> = (1..=n_max)
        .into_par_iter()
        .flat_map_iter(|n| shift_lemma_violations_with(generator, n, 1..=n, MAX_COUNTEREXAMPLES))
        .map(|v| cx(format!("n={} r={} t={}", v.n, v.r, v.i), v.detail))
        .collect();
    VerificationReport::from_failures("shift_lemma", format!("1 <= r <= n <= {n_max}"), failures)
}

pub fn check_self_similarity(generator: &dyn DyadicGenerator, k_max: u32) -> VerificationReport {
    let failures = (1..=k_max.min(39)).flat_map(|k| {
        (0..k).flat_map(move |a| {
            self_similarity_failures_with(generator, k, a)
                .into_iter()
                .map(move |m| cx(format!("k={k} a={a} m={m}"), "identity fails"))
        })
    });
    VerificationReport::from_failures("self_similarity", format!("a < k <= {k_max}"), failures)
}

pub fn check_fibonacci(k_max: u32) -> VerificationReport {
    let k_max = k_max.min(90);
    let failures = (1..=k_max).flat_map(|k| {
        let mut out = Vec::new();
        if !fibonacci_approximation_holds(k) {
            out.push(cx(format!("k={k}"), "|F_(k+1)/F_k - phi| > 1/F_k^2"));
        }
        if !fibonacci_coprime(k) {
            out.push(cx(format!("k={k}"), "F_k and F_(k+1) share a factor"));
        }
        out
    });
    VerificationReport::from_failures("fibonacci_approximation", format!("1 <= k <= {k_max}"), failures)
}

/// Greedy remainder bound for `samples` values `A ≤ a_max`, every part
/// count from 1 to 6, plus sparsity of the full decomposition.
pub fn check_zeckendorf(samples: usize, a_max: u64, seed: u64) -> VerificationReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let values: Vec<u64> = (0..samples).map(|_| rng.gen_range(1..=a_max)).collect();
    let failures = values.into_iter().flat_map(|a| {
        let mut out = Vec::new();
        for l in 1..=6 {
            let z = zeckendorf(a, Some(l)).expect("positive");
            if !z.remainder_bound_holds() {
                out.push(cx(format!("A={a} l={l}"), format!("remainder {} after {:?}", z.remainder, z.parts)));
            }
        }
        let z = zeckendorf(a, None).expect("positive");
        if z.remainder != 0 || !z.is_sparse() {
            out.push(cx(format!("A={a}"), format!("{:?}", z.parts)));
        }
        out
    });
    VerificationReport::from_failures(
        "zeckendorf",
        format!("{samples} values A <= {a_max}, seed {seed}"),
        failures,
    )
}

/// Runs every verifier: bit-level lemmas up to level `t_max`, window lemmas
/// for prefixes up to `n_max`.
pub fn verify_all(t_max: u32, n_max: u64) -> Vec<VerificationReport> {
    verify_all_with(&VanDerCorput, t_max, n_max)
}

pub fn verify_all_with(generator: &dyn DyadicGenerator, t_max: u32, n_max: u64) -> Vec<VerificationReport> {
    vec![
        check_split_index(t_max),
        check_flip_order(t_max),
        check_matchings(t_max),
        check_self_similarity(generator, t_max),
        check_main_lemma(generator, n_max),
        check_shift_lemma(generator, n_max),
        check_fibonacci(40),
        check_zeckendorf(10_000, 1_000_000_000_000, 0x5eed),
    ]
}

pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.all_passed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::bit_reverse;

    /// Flips the lowest grid bit of one sequence index.
    struct FlippedBit(u64);

    impl DyadicGenerator for FlippedBit {
        fn numerator(&self, m: u64, bits: u32) -> u64 {
            let x = bit_reverse(m, bits);
            if m == self.0 {
                x ^ 1
            } else {
                x
            }
        }
    }

    #[test]
    fn smallest_scales_pass() {
        let reports = verify_all(1, 3);
        assert!(all_passed(&reports), "{reports:?}");
    }

    #[test]
    fn moderate_scales_pass() {
        let reports = verify_all(8, 256);
        assert!(all_passed(&reports), "{reports:?}");
    }

    #[test]
    fn corrupted_generator_is_caught() {
        let reports = verify_all_with(&FlippedBit(5), 6, 64);
        assert!(!all_passed(&reports));
        let main = reports.iter().find(|r| r.lemma == "main_lemma").unwrap();
        assert!(!main.all_passed);
        assert!(!main.counterexamples.is_empty() && main.counterexamples.len() <= MAX_COUNTEREXAMPLES);
    }

    #[test]
    fn report_json_shape() {
        let r = check_fibonacci(10);
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        for key in ["lemma", "parameter_range", "all_passed", "counterexamples"] {
            assert!(v.get(key).is_some());
        }
        let back: VerificationReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}
