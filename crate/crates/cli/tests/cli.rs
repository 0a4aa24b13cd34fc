use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn pferrer(args: &[&str], stdin: Option<&str>, env: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pferrer"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    match env {
        Some(limits) => cmd.env("FERRER_LIMITS", limits),
        None => cmd.env_remove("FERRER_LIMITS"),
    };
    let mut child = cmd.spawn().expect("binary runs");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn run(args: &[&str]) -> Output {
    pferrer(args, None, None)
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn report_4322_matches_golden_files() {
    let path = fixture("4322.json");
    let out = run(&["report", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let golden = std::fs::read_to_string(fixture("4322.report.json")).unwrap();
    assert_eq!(String::from_utf8(out.stdout.clone()).unwrap(), golden);

    let doc = json_of(&out);
    assert_eq!(doc["summary"]["projdim"], 5);
    assert_eq!(doc["summary"]["reg"], json!([3, 2]));
    assert_eq!(doc["betti"], json!({"1": 21, "2": 50, "3": 45, "4": 17, "5": 2}));
    assert_eq!(doc["boxes"], 21);

    let text = run(&["report", path.to_str().unwrap(), "--text"]);
    let golden = std::fs::read_to_string(fixture("4322.report.txt")).unwrap();
    assert_eq!(String::from_utf8(text.stdout).unwrap(), golden);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let path = fixture("54432.json");
    let args = ["report", path.to_str().unwrap(), "--certificate"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0), "{}", stderr(&first));
    assert_eq!(run(&args).stdout, first.stdout);
    let doc = json_of(&first);
    assert_eq!(doc["certificate"]["sums"].as_array().unwrap().len(), 7);
    assert_eq!(doc["certificate"]["sums"][0], "x3_1*x2_1*x1_1");
}

#[test]
fn report_reads_stdin() {
    let out = pferrer(&["report", "-", "--json"], Some("1"), None);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc = json_of(&out);
    assert_eq!(doc["betti"], json!({"1": 1}));
    assert_eq!(doc["summary"]["n"], 1);
}

#[test]
fn malformed_input_exits_2_with_path() {
    let out = pferrer(&["report", "-"], Some("[[1],[2]]"), None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not weakly decreasing at $[1]"), "{}", stderr(&out));
    let out = pferrer(&["report", "-"], Some("[2, "), None);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["report", "/nonexistent/diagram.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_on_fixtures() {
    for name in ["4322.json", "hvector.json"] {
        let path = fixture(name);
        let out = run(&["verify", path.to_str().unwrap(), "--seed", "3"]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stderr(&out));
        let doc = json_of(&out);
        assert_eq!(doc["pass"], true);
        assert_eq!(doc["checks"].as_array().unwrap().len(), 4);
    }
    let out = pferrer(&["verify", "-", "--max-degree", "8"], Some("[2,2]"), None);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
}

#[test]
fn verify_enforces_size_limits() {
    // the 6-deep cube of side 3: 18 variables, over the oracle's 16
    let cube = (1..6).fold(json!(3), |inner, _| json!([inner.clone(), inner.clone(), inner]));
    let out = pferrer(&["verify", "-"], Some(&cube.to_string()), None);
    assert_eq!(out.status.code(), Some(4), "{}", stderr(&out));
    let out = pferrer(&["verify", "-"], Some("[[2,1]]"), Some(r#"{"max_oracle_generators": 2}"#));
    assert_eq!(out.status.code(), Some(4));
    let out = pferrer(&["report", "-"], Some("[[1]]"), Some(r#"{"max_depth": 2}"#));
    assert_eq!(out.status.code(), Some(4));
    let out = pferrer(&["report", "-"], Some("1"), Some("not json"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn macaulay_realizes_and_rejects() {
    let out = run(&["macaulay", "--h", "1,4,3,4,1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc = json_of(&out);
    assert_eq!(doc["verified"], true);
    assert_eq!(doc["dual_h_vector"], json!([1, 4, 3, 4, 1]));
    assert_eq!(doc["generators"].as_array().unwrap().len(), 13);
    assert_eq!(doc["dual_generators"].as_array().unwrap().len(), 12);

    let out = run(&["macaulay", "--h", "1,2,4"]);
    assert_eq!(out.status.code(), Some(5));
    assert!(stderr(&out).contains("h_2 ≤ 3"), "{}", stderr(&out));

    let out = run(&["macaulay", "--h", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["diagram"], json!(1));

    let out = run(&["macaulay", "--h", "2,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pure_resolutions() {
    let doc = json_of(&run(&["pure", "--a1", "2", "--a2", "3", "--beta0", "1"]));
    assert_eq!(doc["betti"], json!([1, 3, 2]));
    let doc = json_of(&run(&["pure", "--c", "2", "--p", "2", "--alpha", "5"]));
    assert_eq!(doc["type"], json!([0, 10, 15]));
    assert_eq!(doc["betti"], json!([1, 3, 2]));
    let out = run(&["pure", "--a1", "2", "--a2", "5", "--beta0", "1"]);
    assert_eq!(out.status.code(), Some(6));
    let out = run(&["pure", "--a1", "3", "--a2", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["pure", "--a1", "2", "--c", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn series_and_dual() {
    let path = fixture("4322.json");
    let doc = json_of(&run(&["series", path.to_str().unwrap(), "--taylor", "3"]));
    assert_eq!(doc["series"], "(1+3t+6t²−11t³+2t⁴)/(1−t)⁹");
    assert_eq!(doc["s_vector"], json!([9, 2]));
    // 12 variables, no generators below degree 3, 21 cubes removed
    assert_eq!(doc["taylor"], json!([1, 12, 78, 364 - 21]));

    let doc = json_of(&run(&["dual", path.to_str().unwrap()]));
    assert_eq!(doc["dual_series"], "(1+3t+6t²+9t³+2t⁴)/(1−t)⁹");
    assert_eq!(doc["betti_relation"], true);
}
