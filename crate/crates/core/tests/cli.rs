use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn isofield(out: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isofield"))
        .env_remove("ISOFIELD_OUT_DIR")
        .arg("--out-dir")
        .arg(out)
        .args(args)
        .output()
        .unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    fs::read_to_string(path).unwrap()
}

#[test]
fn help_matches_golden_files() {
    let cases = [
        (vec!["--help"], "help.txt"),
        (vec!["simulate", "--help"], "help_simulate.txt"),
        (vec!["test", "--help"], "help_test.txt"),
        (vec!["check-assumption", "--help"], "help_check-assumption.txt"),
        (vec!["conj-basis-demo", "--help"], "help_conj-basis-demo.txt"),
        (vec!["pilot", "--help"], "help_pilot.txt"),
    ];
    for (args, file) in cases {
        let out = Command::new(env!("CARGO_BIN_EXE_isofield")).args(&args).output().unwrap();
        assert!(out.status.success());
        assert_eq!(String::from_utf8(out.stdout).unwrap(), golden(file), "{file}");
    }
}

#[test]
fn simulate_writes_stamped_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sim.json");
    fs::write(&cfg, r#"{"space":"sphere","l_max":5,"law":"complex_gaussian","seed":11,"output":"f"}"#).unwrap();
    let out = isofield(dir.path(), &["simulate", "--config", cfg.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("f.summary.json")).unwrap()).unwrap();
    assert_eq!(summary["seed"], 11);
    assert_eq!(summary["config_hash"].as_str().unwrap().len(), 64);
    assert!(summary["parseval_gap"].as_f64().unwrap() < 1e-10);

    let csv = fs::read_to_string(dir.path().join("f.field.csv")).unwrap();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("# config_hash="));
    assert_eq!(lines.next().unwrap(), "colatitude,longitude,weight,value");
    // 6 x 11 grid for l_max = 5
    assert_eq!(lines.count(), 66);

    let coeffs = isofield::field::HarmonicCoefficients::from_json(
        &fs::read_to_string(dir.path().join("f.coeffs.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(coeffs.l_max(), 5);
}

#[test]
fn seed_flag_overrides_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sim.json");
    fs::write(&cfg, r#"{"space":"torus","l_max":4,"law":"rademacher_real","seed":1,"output":"t"}"#).unwrap();
    let read = |seed: &str| {
        assert!(isofield(dir.path(), &["simulate", "--config", cfg.to_str().unwrap(), "--seed", seed]).status.success());
        fs::read_to_string(dir.path().join("t.coeffs.json")).unwrap()
    };
    let (a, b, c) = (read("2"), read("3"), read("2"));
    assert_ne!(a, b);
    assert_eq!(a, c);
}

#[test]
fn unknown_config_key_is_a_validation_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.json");
    fs::write(&cfg, r#"{"space":"sphere","l_max":3,"law":"complex_gaussian","seed":1,"colour":"red"}"#).unwrap();
    let out = isofield(dir.path(), &["simulate", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("colour"));
}

#[test]
fn missing_config_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = isofield(dir.path(), &["test", "--config", "/nonexistent/cfg.json"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn bad_arguments_exit_with_validation_code() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(isofield(dir.path(), &["check-assumption", "--degree", "x"]).status.code(), Some(2));
    assert_eq!(isofield(dir.path(), &["check-assumption", "--degree", "0"]).status.code(), Some(2));
    assert_eq!(isofield(dir.path(), &["frobnicate"]).status.code(), Some(2));
}

#[test]
fn test_command_writes_report_and_runs() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("t.json");
    fs::write(
        &cfg,
        r#"{"experiment":{"kind":"independence","space":"torus","degree":3,"law":"fixed_modulus_phase","n_realizations":50,"seed":4},"runs":3,"output":"ind"}"#,
    )
    .unwrap();
    let out = isofield(dir.path(), &["test", "--config", cfg.to_str().unwrap(), "--runs", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("ind.report.json")).unwrap()).unwrap();
    assert_eq!(report["n_runs"], 2);
    assert_eq!(report["reports"].as_array().unwrap().len(), 2);
    let runs = fs::read_to_string(dir.path().join("ind.runs.csv")).unwrap();
    // stamp, header, two rows
    assert_eq!(runs.lines().count(), 4);
}

#[test]
fn search_rotation_rejected_for_invariance() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("t.json");
    fs::write(
        &cfg,
        r#"{"experiment":{"kind":"invariance","space":"sphere","l_max":2,"law":"complex_gaussian","n_per_batch":20,"seed":4}}"#,
    )
    .unwrap();
    let out = isofield(dir.path(), &["test", "--config", cfg.to_str().unwrap(), "--search-rotation"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_assumption_reports_every_degree() {
    let dir = tempfile::tempdir().unwrap();
    let out = isofield(dir.path(), &["check-assumption", "--degree", "3", "--samples", "100"]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("check_assumption.json")).unwrap()).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["witness_found"], false);
    assert_eq!(rows[1]["witness_found"], true);
}

#[test]
fn conj_basis_demo_is_certified() {
    let dir = tempfile::tempdir().unwrap();
    let out = isofield(dir.path(), &["conj-basis-demo", "--seed", "5"]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("conj_basis_report.json")).unwrap()).unwrap();
    assert_eq!(v["status"], "split");
    assert!(v["orthogonality"].as_f64().unwrap() < 1e-10);
}

#[test]
fn out_dir_defaults_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_isofield"))
        .env("ISOFIELD_OUT_DIR", dir.path())
        .args(["conj-basis-demo"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.path().join("conj_basis_report.json").exists());
}
