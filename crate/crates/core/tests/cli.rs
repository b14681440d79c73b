use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hankel-dual"));
    c.args(args).env_remove("HANKEL_DUAL_JOBS");
    for (k, v) in env {
        c.env(k, v);
    }
    c.output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

#[test]
fn passing_group_exits_zero() {
    let o = run(&["verify", "--group", "G6", "--format", "text"], &[]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("G6"));
}

#[test]
fn failing_entry_exits_one() {
    assert_eq!(code(&run(&["verify", "--entry", "T23"], &[])), 1);
}

#[test]
fn unreachable_tolerance_exits_two() {
    assert_eq!(code(&run(&["verify", "--entry", "T11", "--tol", "1e-15"], &[])), 2);
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &["verify", "--entry", "NOPE"][..],
        &["verify", "--group", "G9"],
        &["verify", "--tol", "-1"],
        &["verify", "--jobs", "0"],
        &["check", "--seed", "BOGUS"],
        &["frobnicate"],
    ] {
        let o = run(args, &[]);
        assert_eq!(code(&o), 64, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stderr.is_empty(), "{args:?}: silent");
    }
    let o = run(&["verify", "--entry", "T05"], &[("HANKEL_DUAL_JOBS", "many")]);
    assert_eq!(code(&o), 64);
}

#[test]
fn unknown_id_is_echoed() {
    let o = run(&["verify", "--entry", "NOPE"], &[]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("NOPE"));
}

#[test]
fn help_and_version_exit_zero() {
    for args in [&["--help"][..], &["--version"], &["verify", "--help"]] {
        let o = run(args, &[]);
        assert_eq!(code(&o), 0, "{args:?}");
        assert!(!o.stdout.is_empty());
    }
}

#[test]
fn unwritable_output_exits_74() {
    let o = run(&["verify", "--entry", "T05", "--out", "/nonexistent-dir/report.json"], &[]);
    assert_eq!(code(&o), 74);
}

#[test]
fn check_reports_every_seed() {
    let o = run(&["check", "--format", "text"], &[]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 16);
    assert!(out.lines().all(|l| l.starts_with("Pass")));
    let one = run(&["check", "--seed", "S6512_1a", "--format", "json"], &[]);
    assert_eq!(code(&one), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&one)).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
}

#[test]
fn list_has_one_line_per_item() {
    let o = run(&["list"], &[]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 57);
}

#[test]
fn list_json_feeds_back_as_config() {
    let o = run(&["list", "--json"], &[]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["entries"].as_array().unwrap().len(), 41);
    assert_eq!(doc["failure_seeds"].as_array().unwrap().len(), 16);
    let path = temp_file(&stdout(&o));
    let r = run(&["verify", "--config", path.path().to_str().unwrap(), "--format", "json"], &[]);
    assert_eq!(code(&r), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout(&r)).unwrap();
    assert_eq!(report["config"]["entries"].as_array().unwrap().len(), 41);
    assert_eq!(report["config"]["seeds"].as_array().unwrap().len(), 16);
    assert_eq!(report["rows"].as_array().unwrap().len(), 139);
}

#[test]
fn toml_config_selects_and_overrides() {
    let path = temp_file(
        r#"
entries = ["T05"]
seeds = ["S6514_1"]
jobs = 2
format = "csv"

[tol_class]
oscillatory = 1e-6

[grid]
T05 = [{ z = 0.25 }, { z = 4.0 }]
"#,
    );
    let o = run(&["verify", "--config", path.path().to_str().unwrap()], &[]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 3);
    assert!(out.contains("z=0.25") && out.contains("z=4"));
    assert!(out.contains("S6514_1"));
}

#[test]
fn bad_config_is_a_usage_error() {
    let unknown_key = temp_file("entries = [\"T05\"]\ncolour = \"blue\"\n");
    assert_eq!(code(&run(&["verify", "--config", unknown_key.path().to_str().unwrap()], &[])), 64);
    let wrong_params = temp_file("entries = [\"T05\"]\n[grid]\nT05 = [{ q = 1.0 }]\n");
    assert_eq!(code(&run(&["verify", "--config", wrong_params.path().to_str().unwrap()], &[])), 64);
    assert_eq!(code(&run(&["verify", "--config", "/no/such/file.toml"], &[])), 74);
}

#[test]
fn json_and_csv_agree_on_statuses() {
    let j = run(&["verify", "--group", "G4", "--format", "json", "--jobs", "1"], &[]);
    let c = run(&["verify", "--group", "G4", "--format", "csv"], &[("HANKEL_DUAL_JOBS", "3")]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&j)).unwrap();
    let from_json: Vec<String> =
        report["rows"].as_array().unwrap().iter().map(|r| r["status"].as_str().unwrap().to_string()).collect();
    let out = stdout(&c);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    let col = rdr.headers().unwrap().iter().position(|h| h == "status").unwrap();
    let from_csv: Vec<String> = rdr.records().map(|r| r.unwrap()[col].to_string()).collect();
    assert_eq!(from_json, from_csv);
}
