//! End-to-end runs of the `fitting` binary: argument handling, output
//! shapes, and the documented exit codes (0 pass, 1 check failure, 2
//! usage or I/O error).

use std::process::{Command, Output};

fn fitting(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fitting"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn info_reports_structure_of_a_family_group() {
    let out = fitting(&["info", "symmetric-4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("order: 24"));
    assert!(text.contains("derived length: 3"));
    assert!(text.contains("nilpotency class: not nilpotent"));
    assert!(text.contains("fitting subgroup: order 4"));
    assert!(text.contains("soluble radical: order 24"));
}

#[test]
fn info_rejects_unknown_sources() {
    let out = fitting(&["info", "no-such-family-9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("neither a file nor a family"));
}

#[test]
fn eval_true_sentence_exits_zero() {
    let out = fitting(&["eval", "cyclic-6", "A x1. A x2. [x1,x2]=1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).starts_with("true"));
}

#[test]
fn eval_false_sentence_exits_one_and_shows_a_witness() {
    let out = fitting(&["eval", "symmetric-3", "A x1. A x2. [x1,x2]=1"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.starts_with("false"));
    assert!(text.contains("witness: x1 ="));
}

#[test]
fn eval_accepts_parameters() {
    // In the quaternion group the center is {1, -1}; p0 = -1 (index 1)
    // commutes with everything.
    let out = fitting(&["eval", "quaternion8", "A x1. [p0, x1] = 1", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).starts_with("true"));
    // i (index 2) does not.
    let out = fitting(&["eval", "quaternion8", "A x1. [p0, x1] = 1", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn eval_usage_errors_exit_two() {
    let out = fitting(&["eval", "cyclic-4", "[x1,"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("parse error"));

    let out = fitting(&["eval", "cyclic-4", "x1 = 1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unbound variable x1"));

    let out = fitting(&["eval", "cyclic-4", "p0 = 1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("parameter slot"));

    let out = fitting(&["eval", "cyclic-4", "p0 = 1", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("out of range"));
}

#[test]
fn define_lists_the_fitting_subgroup_of_s3() {
    let out = fitting(&["define", "symmetric-3", "--phi", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("defined set: 3 of 6 elements"));
    assert!(text.contains("formula: A x1. A x2. [p0^x1, p0^x2] = 1"));
}

#[test]
fn define_psi_on_soluble_group_is_everything() {
    let out = fitting(&["define", "symmetric-4", "--psi", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("defined set: 24 of 24 elements"));
}

#[test]
fn verify_single_check_passes() {
    let out = fitting(&["verify", "thm1-fitting", "symmetric-3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("pass  symmetric-3  thm1-fitting"));
    assert!(text.contains("\"fitting_order\": 3"));
}

#[test]
fn verify_unknown_check_id_exits_two() {
    let out = fitting(&["verify", "lemma9", "symmetric-3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown check id"));
}

#[test]
fn group_files_work_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("z4.tbl");
    std::fs::write(&table, "4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n").unwrap();
    let out = fitting(&["info", table.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("order: 4"));

    let perms = dir.path().join("s3.perm");
    std::fs::write(&perms, "3\n1 0 2\n1 2 0\n").unwrap();
    let out = fitting(&["verify", "lemma1", perms.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));

    let broken = dir.path().join("bad.tbl");
    std::fs::write(&broken, "2\n0 1\n0 1\n").unwrap();
    let out = fitting(&["info", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn suite_runs_a_small_corpus_and_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("z6.tbl"), cyclic_table_text(6)).unwrap();
    std::fs::write(dir.path().join("s3.perm"), "3\n1 0 2\n1 2 0\n").unwrap();
    let report_path = dir.path().join("report.json");
    let config_path = dir.path().join("suite.cfg");
    std::fs::write(&config_path, "seed = 5\n").unwrap();

    let out = fitting(&[
        "suite",
        "--corpus",
        dir.path().to_str().unwrap(),
        "--config",
        config_path.to_str().unwrap(),
        "--out",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{} {}", stdout(&out), stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("summary:"));
    assert!(text.contains("0 fail"));

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["version"], 1);
    assert_eq!(report["config"]["seed"], 5);
    assert_eq!(report["entries"].as_array().unwrap().len(), 2);
    assert_eq!(report["summary"]["fail"], 0);
    let checks = report["entries"][0]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 10);
}

#[test]
fn suite_exit_code_reflects_construction_failures() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.tbl"), "2\n0 1\n0 1\n").unwrap();
    std::fs::write(dir.path().join("z2.tbl"), "2\n0 1\n1 0\n").unwrap();
    let report_path = dir.path().join("report.json");
    let out = fitting(&[
        "suite",
        "--corpus",
        dir.path().to_str().unwrap(),
        "--out",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
    assert!(stdout(&out).contains("error"));
    assert!(report_path.exists(), "the report is written even on failure");
}

#[test]
fn suite_report_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("s3.perm"), "3\n1 0 2\n1 2 0\n").unwrap();
    let first = dir.path().join("a.json");
    let second = dir.path().join("b.json");
    for path in [&first, &second] {
        let out = fitting(&[
            "suite",
            "--corpus",
            dir.path().to_str().unwrap(),
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(
        std::fs::read(&first).unwrap(),
        std::fs::read(&second).unwrap(),
        "identical corpus, config and seed must reproduce the report byte for byte"
    );
}

fn cyclic_table_text(n: usize) -> String {
    let mut text = format!("{n}\n");
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| ((i + j) % n).to_string()).collect();
        text.push_str(&row.join(" "));
        text.push('\n');
    }
    text
}

#[test]
fn corpus_dir_must_exist() {
    let out = fitting(&["suite", "--corpus", "/no/such/dir"]);
    assert_eq!(out.status.code(), Some(2));
}
