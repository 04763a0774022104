use std::process::{Command, Output};

fn stickbreak(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stickbreak"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn generate_kronecker_order() {
    let out = stickbreak(&["generate", "--kind", "kronecker-phi", "--n", "4", "--origin"]);
    assert!(out.status.success());
    let idx: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(idx, ["0", "2", "4", "1", "3"]);
}

#[test]
fn windows_csv_schema_and_value() {
    let out = stickbreak(&["windows", "--kind", "vdc2", "--n", "660", "--r", "53", "--origin"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("kind,n,r,min_sum,max_sum,ratio_float"));
    assert!(lines.next().unwrap().starts_with("vdc2,660,53,5/64,"));
}

#[test]
fn discrepancy_and_paircorr_to_files() {
    let dir = tempfile::tempdir().unwrap();
    let disc = dir.path().join("d.json");
    let out = stickbreak(&[
        "discrepancy", "--kind", "vdc2", "--n", "pow2(6..=8)", "--r", "2,4", "--format", "json", "--out",
        disc.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let rows: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&disc).unwrap()).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 6);
    assert!(rows[0].get("max_abs_dev").is_some());

    let pc = dir.path().join("p.csv");
    let out = stickbreak(&["paircorr", "--kind", "kronecker-phi", "--n", "256", "--s", "2..=4", "--out", pc.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&pc).unwrap();
    assert!(text.starts_with("kind,N,s,F_value\n"));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sweep.toml");
    std::fs::write(&cfg, "kind = \"vdc2\"\nn = [7, 15]\nr = \"1..=3\"\norigin = true\n").unwrap();
    let out = stickbreak(&["windows", "--config", cfg.to_str().unwrap(), "--n", "31"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().skip(1).all(|l| l.starts_with("vdc2,31,") && l.ends_with(",1.0")));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["windows", "--kind", "vdc2", "--n", "8", "--r", "8"][..],
        &["windows", "--kind", "nope", "--n", "8", "--r", "2"],
        &["windows", "--kind", "vdc2", "--n", "8"],
        &["windows", "--kind", "vdc2", "--n", "x", "--r", "2"],
        &["paircorr", "--kind", "vdc2", "--n", "64", "--r", "2", "--origin"],
        &["generate", "--kind", "debruijn-log", "--n", "8", "--origin"],
        &["fit", "--quantity", "ratio", "--kind", "vdc2", "--n", "64", "--r", "1,2"],
        &["frobnicate"],
    ] {
        let out = stickbreak(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn verify_small_scales() {
    let out = stickbreak(&["verify", "--t-max", "3", "--n-max", "40"]);
    assert_eq!(out.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for r in reports.as_array().unwrap() {
        assert_eq!(r["all_passed"], true, "{r}");
        assert!(r["counterexamples"].as_array().unwrap().is_empty());
        assert!(r["lemma"].is_string() && r["parameter_range"].is_string());
    }
}

#[test]
fn fit_from_sweep_and_from_file_agree() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("w.csv");
    let common = ["--kind", "kronecker-phi", "--n", "200..=400", "--r", "2..=8", "--origin"];
    let mut args = vec!["windows"];
    args.extend(common);
    args.extend(["--out", table.to_str().unwrap()]);
    assert!(stickbreak(&args).status.success());

    let mut args = vec!["fit", "--quantity", "ratio_bound", "--stability"];
    args.extend(common);
    let direct: serde_json::Value = serde_json::from_str(&stdout(&stickbreak(&args))).unwrap();
    let from_file: serde_json::Value = serde_json::from_str(&stdout(&stickbreak(&[
        "fit", "--quantity", "ratio_bound", "--input", table.to_str().unwrap(),
    ])))
    .unwrap();
    let c = |v: &serde_json::Value| v["fit"]["fitted_c"].as_f64().unwrap();
    assert!((c(&direct) - c(&from_file)).abs() < 1e-9 * c(&direct));
    assert!(direct["stability"]["max_relative_change"].as_f64().unwrap() >= 0.0);
}

#[test]
fn theorem1_record() {
    let out = stickbreak(&["theorem1", "--n-max", "5000"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let long = v["limsup_n_times_longest"].as_f64().unwrap();
    assert!(long < 1.0 / 2f64.ln() && long > 1.44);
    let out = stickbreak(&["theorem1", "--n-max", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gaps_sum_to_one() {
    let out = stickbreak(&["gaps", "--kind", "vdc:3", "--n", "10", "--origin"]);
    assert!(out.status.success());
    let total: f64 = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse::<f64>().unwrap())
        .sum();
    assert!((total - 1.0).abs() < 1e-12);
}
