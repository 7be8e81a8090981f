//! CLI behavior: formats, output files, exit codes on bad input.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dowling-kit"))
}

#[test]
fn gstirling_table_matches_frozen_row() {
    let out = bin()
        .args([
            "table",
            "--kind",
            "gstirling",
            "--n-max",
            "4",
            "--alpha",
            "0",
            "--m",
            "1",
            "--r",
            "0",
            "--format",
            "csv",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("alpha,beta,r,n,k,value\n"));
    // row n = 4: 0,1,7,6,1
    for (k, v) in [(0, 0), (1, 1), (2, 7), (3, 6), (4, 1)] {
        assert!(
            text.contains(&format!("0,1,0,4,{k},{v}\n")),
            "missing S(4,{k})={v}"
        );
    }
    assert!(!text.contains('\r'), "LF line endings only");
}

#[test]
fn dowling_table_renders_canonical_monomials() {
    let out = bin()
        .args([
            "table", "--kind", "dowling", "--n-max", "1", "--m", "2", "--r", "2", "--alpha", "0",
            "--format", "csv",
        ])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("2,2,0,1,x*l + 2\n"), "got: {text}");
}

#[test]
fn bpa_table_matches_fubini_column() {
    let out = bin()
        .args([
            "table", "--kind", "bpa", "--n-max", "4", "--bars", "0", "--format", "csv",
        ])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let expected = "bars,n,count\n0,0,1\n0,1,1\n0,2,3\n0,3,13\n0,4,75\n";
    assert_eq!(text, expected);
}

#[test]
fn check_json_has_schema_version_and_adjudications() {
    let out = bin()
        .args([
            "check", "--suite", "bell", "--n-max", "5", "--format", "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "1");
    assert!(v["adjudications"]
        .as_array()
        .unwrap()
        .iter()
        .any(|a| a["id"] == "bell-egf-as-printed"));
}

#[test]
fn empty_grid_check_is_a_passing_empty_report() {
    let out = bin()
        .args(["check", "--suite", "dowling", "--m", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success(), "empty grid must exit 0");
}

#[test]
fn invalid_ranges_exit_nonzero_with_stderr_message() {
    // oracle enumeration cap
    let out = bin()
        .args(["oracle-diff", "--n-max", "40", "--format", "csv"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    // unknown flag value
    let out = bin()
        .args(["table", "--kind", "nonsense"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(!out.stderr.is_empty());
    // table with invalid parameters (m = 0 makes the Dowling family ill-formed)
    let out = bin()
        .args(["table", "--kind", "dowling", "--m", "0"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    // identity suites validate the grid up front
    for args in [
        ["check", "--suite", "bell", "--m", "0"],
        ["check", "--suite", "dowling", "--r", "-1"],
        ["check", "--suite", "all", "--alpha", "-2"],
    ] {
        let out = bin().args(args).output().unwrap();
        assert!(!out.status.success(), "{args:?} must fail");
        assert!(String::from_utf8_lossy(&out.stderr).contains("requires"));
    }
}

#[test]
fn out_flag_writes_the_same_bytes_as_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let stdout_run = bin()
        .args(["table", "--kind", "bpa", "--n-max", "5", "--format", "csv"])
        .output()
        .unwrap();
    let status = bin()
        .args(["table", "--kind", "bpa", "--n-max", "5", "--format", "csv"])
        .arg("--out")
        .arg(&path)
        .status()
        .unwrap();
    assert!(status.success());
    assert_eq!(std::fs::read(&path).unwrap(), stdout_run.stdout);
}

#[test]
fn asymptotic_json_reconciles_the_lambda_roles() {
    let out = bin()
        .args(["asymptotic", "--n-max", "2", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["note"].as_str().unwrap().contains("series power"));
    let rows = v["rows"].as_array().unwrap();
    assert!(!rows.is_empty());
    // exact column is a 40-significant-digit decimal string
    assert!(rows[0]["exact"].as_str().unwrap().contains('e'));
}

#[test]
fn gstirling_tables_accept_negative_parameters() {
    // translated-Whitney style parameters: S(n,k;-2,0,0)
    let out = bin()
        .args([
            "table",
            "--kind",
            "gstirling",
            "--n-max",
            "3",
            "--alpha",
            "-2",
            "--m",
            "0",
            "--r",
            "0",
            "--format",
            "csv",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    // multiplier is 2n: S(2,1) = 2, S(3,1) = 8
    assert!(text.contains("-2,0,0,3,1,8\n"), "got: {text}");
}
