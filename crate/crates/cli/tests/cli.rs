use std::process::{Command, Output};

fn entdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_entdist"))
        .args(args)
        .output()
        .expect("failed to launch entdist")
}

fn stdout_of(args: &[&str]) -> String {
    let out = entdist(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("non-UTF-8 output")
}

fn data_rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

#[test]
fn asymptotic_reports_crossover_after_the_tie() {
    let out = stdout_of(&["compare", "--regime", "asymptotic", "--n-max", "12"]);
    assert!(out.contains("# R=1: crossover N*=7; tie at N=6"), "{out}");
    assert_eq!(out.lines().last().unwrap(), "# crossover N*=7");
}

#[test]
fn one_pair_summary_says_ring_never_loses() {
    let out = stdout_of(&["sweep", "--regime", "one-pair-traveling", "--n-max", "15"]);
    let last = out.lines().last().unwrap();
    assert!(last.contains("ring >= star for all N"), "{last}");
    // six default radii, 14 user counts each
    assert_eq!(data_rows(&out).len(), 6 * 14);
}

#[test]
fn csv_layout() {
    let out = stdout_of(&["compare", "--regime", "one-pair-per-wirelength", "--radius", "2", "--n-max", "6"]);
    assert!(out.is_ascii());
    assert_eq!(
        out.lines().next().unwrap(),
        "n_parties,radius,e_avg_star,e_avg_ring,winner"
    );
    for row in data_rows(&out) {
        assert_eq!(row.len(), 5);
        for value in &row[1..4] {
            let mantissa = value.split('e').next().unwrap();
            let digits = mantissa.chars().filter(char::is_ascii_digit).count();
            assert!(digits >= 12, "{value}");
            value.parse::<f64>().unwrap();
        }
    }
}

#[test]
fn json_layout_echoes_config() {
    let out = stdout_of(&[
        "compare", "--regime", "asymptotic", "--radius", "0.5", "--radius", "2",
        "--n-min", "3", "--n-max", "8", "--format", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    let meta = &doc["meta"];
    assert_eq!(meta["regime"], "asymptotic");
    assert_eq!(meta["n_min"], 3);
    assert_eq!(meta["n_max"], 8);
    assert_eq!(meta["radii"], serde_json::json!([0.5, 2.0]));
    let records = doc["records"].as_array().unwrap();
    assert_eq!(records.len(), 12);
    assert_eq!(records[3]["n_parties"], 6);
    assert_eq!(records[3]["winner"], "tie");
    for c in doc["crossovers"].as_array().unwrap() {
        assert_eq!(c["crossover"], 7);
    }
}

#[test]
fn records_sorted_by_radius() {
    let out = stdout_of(&["compare", "--radius", "5", "--radius", "0.5", "--n-max", "3"]);
    let radii: Vec<f64> = data_rows(&out).iter().map(|r| r[1].parse().unwrap()).collect();
    assert_eq!(radii, vec![0.5, 0.5, 5.0, 5.0]);
}

#[test]
fn writes_to_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let out = entdist(&["compare", "--n-max", "4", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout_of(&["compare", "--n-max", "4"]));
}

#[test]
fn usage_errors_exit_nonzero() {
    for args in [
        &["compare", "--n-min", "5", "--n-max", "3"][..],
        &["compare", "--n-min", "1"],
        &["compare", "--radius", "-1"],
        &["compare", "--regime", "heuristic"],
        &["compare", "--regime", "heuristic-ad", "--e-distillable", "1.5"],
        &["verify", "--trials", "0"],
        &["figure", "fig9"],
        &["compare", "--regime", "bogus"],
    ] {
        let out = entdist(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unwritable_output_is_an_io_error() {
    let out = entdist(&["compare", "--output", "/nonexistent-dir/report.csv"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot write"));
}

#[test]
fn fixed_heuristic_regime() {
    let out = stdout_of(&[
        "compare", "--regime", "heuristic", "--e-distillable", "0.5", "--delta-success", "0.5",
        "--delta-fail", "0.5", "--p-success", "0.6", "--n-max", "4",
    ]);
    for row in data_rows(&out) {
        let star: f64 = row[2].parse().unwrap();
        assert!((star - 0.36).abs() < 1e-12);
    }
}

#[test]
fn figure_series() {
    let fig2 = stdout_of(&["figure", "fig2", "--n-max", "30", "--radius", "1.5"]);
    let fig3 = stdout_of(&["figure", "fig3", "--n-max", "30", "--radius", "1.5"]);
    assert_eq!(fig2, fig3);
    assert_eq!(fig2.lines().next().unwrap(), "n_parties,e_avg_ring,e_avg_star");
    let first = &data_rows(&fig2)[0];
    assert_eq!(first[0], "2");
    assert_eq!(first[1], first[2], "N=2 must be a tie");

    let wire = stdout_of(&["figure", "classical-wire", "--n-max", "8"]);
    let six = &data_rows(&wire)[4];
    assert_eq!(six[0], "6");
    let (ring, star): (f64, f64) = (six[1].parse().unwrap(), six[2].parse().unwrap());
    assert!((ring - star).abs() < 1e-12);

    let radius: f64 = 0.2;
    let ad = stdout_of(&["figure", "heuristic-ad", "--radius", "0.2", "--n-max", "10"]);
    for row in data_rows(&ad) {
        let n: usize = row[0].parse().unwrap();
        let star: f64 = row[2].parse().unwrap();
        assert!((star - (-8.0 * radius).exp()).abs() < 1e-12);
        let ring: f64 = row[1].parse().unwrap();
        assert!(ring >= star, "N={n}");
    }
}

#[test]
fn verify_is_deterministic() {
    let a = stdout_of(&["verify", "--trials", "200", "--seed", "17"]);
    let b = stdout_of(&["verify", "--trials", "200", "--seed", "17"]);
    assert_eq!(a, b);
    assert!(a.contains("all checks passed"));
    assert!(a.starts_with("verify: trials=200 seed=17"));
}
