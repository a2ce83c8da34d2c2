//! End-to-end checks of the `antipodal` binary: exit codes, output line
//! formats, and the worked examples the subcommands are documented with.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_antipodal"))
}

fn write_set(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

/// Regular set file: n pair angles evenly spaced over [0, 180) degrees.
fn reg_file(dir: &Path, n: usize) -> PathBuf {
    let body: String = (0..n).map(|i| format!("{}\n", i as f64 * 180.0 / n as f64)).collect();
    write_set(dir, &format!("reg{n}.txt"), &body)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn assert_line(haystack: &str, needle: &str) {
    assert!(
        haystack.lines().any(|l| l == needle),
        "expected line {needle:?} in output:\n{haystack}"
    );
}

#[test]
fn solve_reg3_both_objectives() {
    let dir = tempfile::tempdir().unwrap();
    let set = reg_file(dir.path(), 3);

    let out = bin().args(["solve"]).arg(&set).args(["--objective", "max"]).output().unwrap();
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert_line(&text, "n = 3");
    assert_line(&text, "objective = max");
    assert_line(&text, "selection = 010");
    assert_line(&text, "area = 1.299038");
    assert_line(&text, "classification = thick");
    assert_line(&text, "optima = 2");

    let out = bin().args(["solve"]).arg(&set).args(["--objective", "min"]).output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert_line(&text, "selection = 000");
    assert_line(&text, "area = 0.433013");
    assert_line(&text, "classification = thin");
    assert_line(&text, "optima = 6");
}

#[test]
fn solve_accepts_radians() {
    let dir = tempfile::tempdir().unwrap();
    let deg = reg_file(dir.path(), 4);
    let body: String =
        (0..4).map(|i| format!("{:.15}\n", i as f64 * std::f64::consts::PI / 4.0)).collect();
    let rad = write_set(dir.path(), "reg4rad.txt", &body);

    let from_deg = bin().args(["solve"]).arg(&deg).args(["--objective", "max"]).output().unwrap();
    let from_rad = bin()
        .args(["solve"])
        .arg(&rad)
        .args(["--objective", "max", "--unit", "rad"])
        .output()
        .unwrap();
    assert!(from_deg.status.success() && from_rad.status.success());
    assert_eq!(stdout(&from_deg), stdout(&from_rad));
    assert_line(&stdout(&from_deg), "area = 1.707107");
}

#[test]
fn solve_k_variant_reports_exclusions() {
    let dir = tempfile::tempdir().unwrap();
    let set = reg_file(dir.path(), 5);
    let out =
        bin().args(["solve"]).arg(&set).args(["--objective", "max", "--k", "4"]).output().unwrap();
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert_line(&text, "k = 4");
    assert!(text.lines().any(|l| l.starts_with("excluded_pairs = [")), "{text}");
    assert!(text.lines().any(|l| l.starts_with("area = ")), "{text}");
    assert_line(&text, "classification = thick");
}

#[test]
fn solve_k_out_of_range_fails() {
    let dir = tempfile::tempdir().unwrap();
    let set = reg_file(dir.path(), 5);
    let out =
        bin().args(["solve"]).arg(&set).args(["--objective", "min", "--k", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("error:"), "{}", stderr(&out));
}

#[test]
fn classify_reports_flags() {
    let dir = tempfile::tempdir().unwrap();
    let set = reg_file(dir.path(), 4);
    let out = bin().args(["classify"]).arg(&set).args(["--selection", "0010"]).output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert_line(&text, "area = 1.707107");
    assert_line(&text, "thin = false");
    assert_line(&text, "thick = true");
    assert_line(&text, "threshold = 1");
    assert_line(&text, "classification = thick");
}

#[test]
fn classify_rejects_wrong_length_selection() {
    let dir = tempfile::tempdir().unwrap();
    let set = reg_file(dir.path(), 4);
    let out = bin().args(["classify"]).arg(&set).args(["--selection", "01"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("error:"));
}

#[test]
fn parse_errors_name_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let set = write_set(dir.path(), "bad.txt", "0\nsixty\n120\n");
    let out = bin().args(["solve"]).arg(&set).args(["--objective", "min"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("bad.txt:2"), "{err}");
}

#[test]
fn coincident_pair_lines_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    // 190 deg is the antipode of 10 deg: same pair twice.
    let set = write_set(dir.path(), "dup.txt", "10\n100\n190\n");
    let out = bin().args(["solve"]).arg(&set).args(["--objective", "min"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("error:"));
}

#[test]
fn flips_thicken_and_log_steps() {
    let dir = tempfile::tempdir().unwrap();
    let set = reg_file(dir.path(), 6);
    let out = bin().args(["flips"]).arg(&set).args(["--selection", "110011"]).output().unwrap();
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert_line(&text, "start = 110011");
    assert_line(&text, "steps = 1");
    assert_line(&text, "result = 101011");
    assert_line(&text, "thick = true");
}

#[test]
fn flips_report_when_nothing_applies() {
    let dir = tempfile::tempdir().unwrap();
    let set = reg_file(dir.path(), 6);
    let out = bin().args(["flips"]).arg(&set).args(["--selection", "010101"]).output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert_line(&text, "steps = 0 (no flip applies)");
    assert_line(&text, "result = 010101");
}

#[test]
fn counterexample_defaults() {
    let out = bin().args(["counterexample"]).output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert_line(&text, "n = 6");
    assert_line(&text, "P = 001010");
    assert_line(&text, "Q = 010111");
    assert_line(&text, "area_P = 1.039896");
    assert_line(&text, "area_Q = 2.009750");
    assert_line(&text, "thick_P = true");
    assert_line(&text, "thick_Q = false");
    assert_line(&text, "note = Q non-thick beats P thick");
}

#[test]
fn counterexample_rejects_odd_n() {
    let out = bin().args(["counterexample", "--n", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("error:"));
}

#[test]
fn polytope_3d_ratio() {
    let out = bin().args(["polytope", "--d", "3", "--eps", "0.01"]).output().unwrap();
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert_line(&text, "origin_inside_T1 = false");
    assert_line(&text, "origin_inside_T2 = true");
    assert_line(&text, "ratio = 1.903293");
    assert_line(&text, "limit = 2");
}

#[test]
fn gale_meets_its_bound() {
    let out = bin().args(["gale", "--d", "3", "--k", "2"]).output().unwrap();
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert_line(&text, "points = 6");
    assert_line(&text, "min_open_hemisphere = 2");
    assert_line(&text, "bound_met = true");
}

#[test]
fn scales_demo_is_the_frozen_hexad() {
    let out = bin().args(["scales"]).output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert_line(&text, "selection = 001010");
    assert_line(&text, "area = 2.482051");
    assert_line(&text, "optima = 12");
    assert_line(&text, "scale = C C# D# F G# A#");
    assert_line(&text, "tritone_free = true");
}

#[test]
fn verify_small_passes() {
    let out = bin().args(["verify", "--max-n", "4"]).output().unwrap();
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert_line(&text, "verify = passed");
    assert!(text.contains("status = passed"));
    assert!(!text.contains("FAILED"));
}

#[test]
fn verify_rejects_huge_max_n() {
    let out = bin().args(["verify", "--max-n", "20"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn plot_output_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let set = reg_file(dir.path(), 5);
    let first = dir.path().join("a.svg");
    let second = dir.path().join("b.svg");
    for out_path in [&first, &second] {
        let out = bin().args(["plot"]).arg(&set).arg("--out").arg(out_path).output().unwrap();
        assert!(out.status.success(), "stderr: {}", stderr(&out));
        assert_line(&stdout(&out), "selections = 2");
    }
    let a = std::fs::read(&first).unwrap();
    let b = std::fs::read(&second).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn plot_rejects_too_many_overlays() {
    let dir = tempfile::tempdir().unwrap();
    let set = reg_file(dir.path(), 5);
    let out_path = dir.path().join("x.svg");
    let mut cmd = bin();
    cmd.args(["plot"]).arg(&set).arg("--out").arg(&out_path);
    for _ in 0..5 {
        cmd.args(["--selection", "00000"]);
    }
    let out = cmd.output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    let out = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_set_file_exits_1() {
    let out = bin().args(["solve", "/nonexistent/set.txt", "--objective", "min"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("error:"));
}
