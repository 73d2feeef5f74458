//! End-to-end checks of the twistq binary: exit codes, JSON schemas, and
//! the documented worked examples.

use std::process::{Command, Output};

fn twistq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistq"))
        .args(args)
        .output()
        .expect("spawn twistq")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn cartan_json_document() {
    let out = twistq(&["cartan", "A2-2", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["M"], 2);
    assert_eq!(v["Csigma"][1][0], -4);
    assert_eq!(v["d"][1], "1/2");
    assert_eq!(v["marks"][1], 2);
}

#[test]
fn inadmissible_type_is_an_input_error() {
    let out = twistq(&["cartan", "A3-2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_rmu_example() {
    let out = twistq(&["classify", "rmu", "P[1,q^1]", "--mu", "1", "--type", "A2-2"]);
    assert_eq!(out.status.code(), Some(0));
    let out = twistq(&["classify", "rmu", "P[1,q^1]", "--mu", "0", "--type", "A2-2"]);
    assert_eq!(out.status.code(), Some(1), "verdict-false exits 1");
}

#[test]
fn classify_dominant_exit_codes() {
    let out = twistq(&["classify", "dominant", "Y[1,q^1]*P[1,q^3]", "--type", "A2-2"]);
    assert_eq!(out.status.code(), Some(0));
    let out = twistq(&["classify", "dominant", "A[1,q^1]^-1", "--type", "A2-2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn classify_lambda_divisibility() {
    let out = twistq(&["classify", "lambda", "--mu", "0,0,1", "--type", "A5-2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = twistq(&["classify", "lambda", "--mu", "0,0,2", "--type", "A5-2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], true);
}

#[test]
fn qchar_simple_three_terms() {
    let out = twistq(&[
        "qchar", "simple", "P[1,q^-2]*P[1,q^0]^-1", "--type", "A2-2", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
    assert_eq!(v["depth"], "exact");
    // the deepest term carries a two-letter certificate
    let certs: Vec<usize> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["a-certificate"].as_array().unwrap().len())
        .collect();
    assert!(certs.contains(&2));
}

#[test]
fn eval_errors() {
    // node outside I0
    let out = twistq(&["eval", "Y[7,q^1]", "--type", "A2-2"]);
    assert_eq!(out.status.code(), Some(2));
    // syntax error carries a byte offset on stderr
    let out = twistq(&["eval", "Y[1 q^1]", "--type", "A2-2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte"));
}

#[test]
fn eval_json_schema() {
    let out = twistq(&["eval", "Y[1,q^1]", "--type", "A2-2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let f = &v["components"][0]["factors"][0];
    assert!(f["qexp"].as_str().unwrap().ends_with("/2"));
    assert_eq!(v["components"][0]["constant"], "q^1");
}

#[test]
fn shift_and_degree() {
    let out = twistq(&[
        "shift", "P[1,q^2]", "--mu", "-1", "--param", "q^0", "--type", "A2-2", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["components"][0]["factors"].as_array().unwrap().len(), 2);
    // divisibility failure at a fixed node is an input error
    let out = twistq(&[
        "shift", "P[3,q^0]", "--mu", "0,0,-1", "--param", "q^0", "--type", "A5-2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fuse_keeps_u_formal() {
    let out = twistq(&["fuse", "P[1,q^0]", "P[1,q^2]", "--type", "A2-2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let factors = v["coproduct_hw"]["components"][0]["factors"]
        .as_array()
        .unwrap();
    assert!(factors.iter().any(|f| f["uexp"] == 1));
    let spec = v["specialized_u1"]["components"][0]["factors"]
        .as_array()
        .unwrap();
    assert!(spec.iter().all(|f| f["uexp"] == 0));
}

#[test]
fn check_suite() {
    let out = twistq(&["check", "--suite", "structural,g,pij", "--type", "A2-2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["outcomes"].as_array().unwrap().len(), 3);
    // unknown check name
    let out = twistq(&["check", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn batch_run() {
    let dir = std::env::temp_dir().join(format!("twistq-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("batch.toml");
    std::fs::write(
        &file,
        r#"
type = "A2-2"

[[step]]
args = ["classify", "dominant", "Y[1,q^1]"]

[[step]]
args = ["qchar", "simple", "P[1,q^-2]*P[1,q^0]^-1"]

[[step]]
args = ["cartan", "A2-2"]
"#,
    )
    .unwrap();
    let out = twistq(&["run", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("== step 1"));
    assert!(text.contains("== step 3"));
    // a failing verdict propagates as the batch exit code
    std::fs::write(
        &file,
        r#"
type = "A2-2"

[[step]]
args = ["classify", "dominant", "A[1,q^1]^-1"]
"#,
    )
    .unwrap();
    let out = twistq(&["run", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn borel_smoke() {
    let out = twistq(&[
        "borel", "P[1,q^1]", "--mu", "1", "--type", "A2-2", "--depth", "4", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["terms"].as_array().unwrap().len() > 1);
}

#[test]
fn classify_order_cli() {
    let out = twistq(&["classify", "order", "q^0", "q^1", "--type", "A2-2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("height = 1"));
    let out = twistq(&["classify", "order", "q^1", "q^0", "--type", "A2-2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn classify_a22_cli() {
    let out = twistq(&[
        "classify", "a22", "P[1,q^4]*P[1,q^0]^-1", "--type", "A2-2", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pairs"][0]["class"], "J");
}
