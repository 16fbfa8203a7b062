//! End-to-end runs of the `dephasim` binary.

use std::process::{Command, Output};

fn dephasim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dephasim"))
        .args(args)
        .env("DEPHASIM_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Header lines that echo the configuration, as `key = value` config-file lines.
fn echoed_config(text: &str) -> String {
    text.lines()
        .filter_map(|l| l.strip_prefix("# "))
        .filter(|l| l.contains(" = ") && !l.starts_with("note:") && !l.starts_with("command ") && !l.starts_with("output "))
        .map(|l| format!("{l}\n"))
        .collect()
}

fn data_lines(text: &str) -> Vec<&str> {
    text.lines().filter(|l| !l.starts_with('#')).collect()
}

#[test]
fn invalid_population_is_a_usage_error() {
    let out = dephasim(&["timeseries", "--p", "1.2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("p must lie in [0, 1]"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn coherence_outside_the_state_bound_is_rejected() {
    let out = dephasim(&["timeseries", "--p", "0.5", "--v", "0.6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_and_config_key_are_usage_errors() {
    assert_eq!(dephasim(&["bogus"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.cfg");
    std::fs::write(&path, "kappa-c = 0.1\nspin-count = 3\n").unwrap();
    let out = dephasim(&["timeseries", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("spin-count"));
}

#[test]
fn timeseries_columns_and_first_row() {
    let text = stdout(&dephasim(&["timeseries", "--steps", "5", "--tau-max", "1"]));
    assert!(text.starts_with("# dephasim "));
    assert!(text.contains("# command = timeseries\n"));
    let data = data_lines(&text);
    assert_eq!(data[0], "t,tau,concurrence,abs_p_n,s,gamma_l,gamma_c");
    assert_eq!(data.len(), 6);
    let first: Vec<f64> = data[1].split(',').map(|x| x.parse().unwrap()).collect();
    assert_eq!(first, vec![0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0]);
    let last: Vec<f64> = data[5].split(',').map(|x| x.parse().unwrap()).collect();
    assert!((last[1] - 1.0).abs() < 1e-15);
}

#[test]
fn empty_spin_range_is_a_usage_error() {
    assert_eq!(dephasim(&["sweep-n", "--n-min", "5", "--n-max", "4"]).status.code(), Some(2));
}

#[test]
fn empty_table_still_has_header() {
    let table = dephasim::cli::OutputTable::new("sweep-n", &["n", "c_max"]);
    let mut buf = Vec::new();
    table.write_csv(&mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert_eq!(data_lines(&text), vec!["n,c_max"]);
    let json = table.to_json();
    assert_eq!(json["rows"].as_array().unwrap().len(), 0);
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = ["sweep-kappa", "--kappas", "0.1,0.3", "--ns", "2,3", "--steps", "300"];
    assert_eq!(dephasim(&args).stdout, dephasim(&args).stdout);
}

#[test]
fn echoed_metadata_reproduces_the_run() {
    let first = stdout(&dephasim(&["timeseries", "--n", "6", "--kappa-c", "0.2", "--eta", "0.3", "--steps", "50"]));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("echo.cfg");
    std::fs::write(&path, echoed_config(&first)).unwrap();
    let second = stdout(&dephasim(&["timeseries", "--config", path.to_str().unwrap()]));
    assert_eq!(first, second);
}

#[test]
fn command_line_flags_override_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.cfg");
    std::fs::write(&path, "n = 7\nsteps = 20\n").unwrap();
    let text = stdout(&dephasim(&["timeseries", "--config", path.to_str().unwrap(), "--n", "3"]));
    assert!(text.contains("# n = 3\n"));
    assert!(text.contains("# steps = 20\n"));
}

#[test]
fn json_output_carries_meta_and_rows() {
    let text = stdout(&dephasim(&["limits", "--ns", "100,1000", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["meta"]["command"], "limits");
    assert_eq!(v["rows"].as_array().unwrap().len(), 2);
}

#[test]
fn unwritable_output_is_an_io_error() {
    let out = dephasim(&["timeseries", "--steps", "3", "--output", "/nonexistent-dir/out.csv"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn file_output_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let args = ["timeseries", "--steps", "10"];
    let piped = stdout(&dephasim(&args));
    let mut with_file = args.to_vec();
    with_file.extend(["--output", path.to_str().unwrap()]);
    let out = dephasim(&with_file);
    assert!(out.status.success() && out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    // Only the echoed output path differs.
    assert_eq!(data_lines(&written), data_lines(&piped));
}

#[test]
fn fit_reads_a_sweep_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let out = dephasim(&["sweep-n", "--n-max", "14", "--fit-min", "3", "--fit-max", "14", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    let sweep = std::fs::read_to_string(&path).unwrap();
    let noted: f64 = sweep
        .lines()
        .find_map(|l| l.strip_prefix("# note: fit.c-max.slope = "))
        .unwrap()
        .parse()
        .unwrap();
    let fit = stdout(&dephasim(&["fit", "--input", path.to_str().unwrap(), "--x-min", "3", "--x-max", "14"]));
    let rows = data_lines(&fit);
    let header: Vec<&str> = rows[0].split(',').collect();
    let values: Vec<&str> = rows[1].split(',').collect();
    let slope: f64 = values[header.iter().position(|h| *h == "slope").unwrap()].parse().unwrap();
    assert!((slope - noted).abs() <= 1e-12 * noted.abs(), "{slope} vs {noted}");
}
