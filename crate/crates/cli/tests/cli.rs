use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mirabolic"))
}

fn write(name: &str, contents: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    p.push(name);
    std::fs::write(&p, contents).unwrap();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_json(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let stderr = String::from_utf8_lossy(&out.stderr);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}; stderr: {stderr}"));
    (v, out.status.code().unwrap())
}

#[test]
fn full_last_row_has_full_depth() {
    let f = write("full_row.txt", "1 0 0\n0 2 0\n1 1 0\n");
    let (v, code) = run_json(&["classify", &f, "--certificate"]);
    assert_eq!(code, 0);
    assert_eq!(v["depth"], 3);
    assert_eq!(v["a_part"], json!([]));
    assert_eq!(v["stabilizer_dim"], 0);
    assert_eq!(v["conjugator"].as_array().unwrap().len(), 3);
}

#[test]
fn zero_matrix_has_depth_one() {
    let f = write("zero.txt", "0 0 0\n0 0 0\n0 0 0\n");
    let (v, code) = run_json(&["classify", &f]);
    assert_eq!(code, 0);
    assert_eq!(v["depth"], 1);
    assert_eq!(v["a_part"], json!([{"re": "0", "partition": [1, 1]}]));
    assert_eq!(v["stabilizer_dim"], 6);
}

#[test]
fn normal_form_is_echoed() {
    // pr'(diag(1, 2, J_2))
    let rows = [
        ["1", "0", "0", "0"],
        ["0", "2", "0", "0"],
        ["0", "0", "0", "0"],
        ["0", "0", "1", "0"],
    ];
    let f = write("normal.json", &serde_json::to_string(&rows).unwrap());
    let (v, code) = run_json(&["classify", &f]);
    assert_eq!(code, 0);
    assert_eq!(v["depth"], 2);
    assert_eq!(
        v["a_part"],
        json!([{"re": "2", "partition": [1]}, {"re": "1", "partition": [1]}])
    );
    assert_eq!(v["normal_form"], json!(rows));
}

#[test]
fn mirabolic_spec_round_trips_through_classify() {
    let spec =
        json!({"field": "R", "depth": 2, "a_part": [{"re": "0", "im": "1", "partition": [1]}]});
    let f = write("mirabolic.json", &spec.to_string());
    let (v, code) = run_json(&["classify", &f]);
    assert_eq!(code, 0);
    assert_eq!(v["depth"], spec["depth"]);
    assert_eq!(v["a_part"], spec["a_part"]);
}

#[test]
fn classify_reports_parse_positions_and_spectrum_mismatch() {
    let f = write("bad.txt", "1 0\n0 q\n");
    let out = run(&["classify", &f]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, entry 2"));

    let f = write("no_hint.txt", "5 0\n0 0\n");
    let out = run(&["classify", &f, "--eigen", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("spectrum mismatch"));

    let f = write("last_col.txt", "1 1\n0 0\n");
    assert_eq!(run(&["classify", &f]).status.code(), Some(2));
    let (v, code) = run_json(&["classify", &f, "--project"]);
    assert_eq!(code, 0);
    assert_eq!(v["depth"], 1);
}

#[test]
fn regular_semisimple_moment_images() {
    let f = write(
        "rs2.json",
        r#"{"field":"C","classes":[{"re":"1","partition":[1]},{"re":"2","partition":[1]}]}"#,
    );
    let (v, code) = run_json(&["moment", &f, "--all", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(v["all_agree"], true);
    let mut depths: Vec<u64> = v["records"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["symbolic"]["depth"].as_u64().unwrap())
        .collect();
    depths.sort();
    assert_eq!(depths, [1, 1, 2]);
}

#[test]
fn hook_dense_image() {
    let f = write(
        "hook.json",
        r#"{"field":"C","classes":[{"re":"0","partition":[2,1]}]}"#,
    );
    let (v, code) = run_json(&["moment", &f, "--dense"]);
    assert_eq!(code, 0);
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["symbolic"]["depth"], 2);
    assert_eq!(
        records[0]["symbolic"]["a_part"],
        json!([{"re": "0", "partition": [1]}])
    );

    let (v, _) = run_json(&["moment", &f, "--selection", r#"{"0":{"0":1}}"#]);
    assert_eq!(v["records"][0]["symbolic"]["depth"], 1);
    assert_eq!(
        run(&["moment", &f, "--selection", r#"{"0":{"0":2}}"#])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn enumerate_lists_selections_with_positions() {
    let f = write(
        "hook_enum.json",
        r#"{"field":"C","classes":[{"re":"0","partition":[2,1]}]}"#,
    );
    let (v, code) = run_json(&["enumerate", &f]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 3);
    let dense: Vec<&Value> = v["selections"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["dense"] == true)
        .collect();
    assert_eq!(dense.len(), 1);
    assert_eq!(dense[0]["positions"], json!([3]));
}

#[test]
fn attach_and_restrict() {
    let f = write(
        "unip3.json",
        r#"{"field":"C","classes":[{"re":"0","partition":[3]}]}"#,
    );
    let (v, code) = run_json(&["attach", &f]);
    assert_eq!(code, 0);
    let label = write("unip3_label.json", &v["label"].to_string());
    let (r, code) = run_json(&["restrict", &label]);
    assert_eq!(code, 0);
    assert_eq!(r["restriction"]["depth"], 3);
    assert_eq!(r["restriction"]["factors"], json!([]));

    let m = write("depth3.json", r#"{"depth":3,"a_part":[]}"#);
    let (p, _) = run_json(&["attach", &m]);
    assert_eq!(p["label"], r["restriction"]);
}

#[test]
fn attach_requires_signs_for_real_singles() {
    let f = write(
        "real1.json",
        r#"{"field":"R","classes":[{"re":"1","partition":[1,1]}]}"#,
    );
    assert_eq!(run(&["attach", &f]).status.code(), Some(2));
    let (v, code) = run_json(&["attach", &f, "--signs", "[[1]]"]);
    assert_eq!(code, 0);
    assert_eq!(v["label"]["factors"][0]["w"], 1);
}

#[test]
fn verify_corpus_passes() {
    let (v, code) = run_json(&["verify", "--corpus", "4", "--field", "C", "--geometry"]);
    assert_eq!(code, 0);
    let s = &v["summary"];
    assert_eq!(s["failed"], 0);
    assert_eq!(s["passed"], s["total"]);
}

#[test]
fn verify_single_speh_datum() {
    let f = write(
        "speh.json",
        r#"{"field":"R","classes":[{"re":"0","im":"1","partition":[2]}]}"#,
    );
    let (v, code) = run_json(&["verify", &f]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["status"], "pass");
    assert!(v["results"][0]["reports"][0]["representation"]["factors"][0]["kind"] == "speh");
}

#[test]
fn unsupported_shapes_are_skipped() {
    let f = write(
        "third.json",
        r#"{"field":"R","classes":[{"re":"0","im":"1/3","partition":[1]}]}"#,
    );
    let (v, code) = run_json(&["verify", &f]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["status"], "skipped:UnsupportedOrbitShape");
    assert_eq!(v["summary"]["skipped"], 1);
}

#[test]
fn output_is_deterministic_and_out_writes_a_file() {
    let a = run(&["verify", "--corpus", "3", "--field", "R", "--seed", "11"]);
    let b = run(&["verify", "--corpus", "3", "--field", "R", "--seed", "11"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let mut p = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    p.push("verify_out.json");
    let path = p.to_string_lossy().into_owned();
    let c = run(&[
        "verify", "--corpus", "3", "--field", "R", "--seed", "11", "--out", &path,
    ]);
    assert!(c.stdout.is_empty());
    assert_eq!(std::fs::read(&p).unwrap(), a.stdout);
}
