use std::process::{Command, Output};

use serde_json::Value;

fn hv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const OMEGA: &str = r#"{"lambda":"2","alpha":"1","beta":"3"}"#;
const A: &str = r#"{"family":"intermediate","params":{"gamma":"1/3","alpha":"2","beta":"1"}}"#;

#[test]
fn act_prints_the_result() {
    // L_1 d = 2 (d + 1)(d - 1)
    let o = hv(&["act", "--family", "omega", "--params", OMEGA, "--gen", "L[1]", "--vec", "d"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2*d^2 - 2");
    // I_1 d = 2 * 3 (d - 1)
    let o = hv(&["act", "--family", "omega", "--params", OMEGA, "--gen", "I[1]", "--vec", "d", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"], "6*d - 6");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| hv(args).status.code();
    assert_eq!(code(&["check", "jacobi", "--window", "4"]), Some(0));
    assert_eq!(
        code(&["verify", "nilpotency", "--family", "omega", "--params", OMEGA, "--gen", "L[2]", "--vec", "1"]),
        Some(1)
    );
    assert_eq!(
        code(&["verify", "nilpotency", "--family", "omega", "--params", OMEGA, "--gen", "L[2]", "--vec", "1", "--not-nilpotent"]),
        Some(0)
    );
    let same = format!(r#"{{"a":{A},"b":{A}}}"#);
    assert_eq!(code(&["distinguish", "--params", &same]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(3));
    assert_eq!(code(&["act", "--family", "omega", "--params", OMEGA, "--gen", "L[1]", "--vec", "d +"]), Some(3));
    assert_eq!(code(&["act", "--family", "nope", "--params", "{}", "--gen", "L[1]", "--vec", "1"]), Some(3));
    assert_eq!(code(&["check", "axioms", "--family", "ind", "--params", "{not json"]), Some(3));
    assert_eq!(code(&["--help"]), Some(0));
}

#[test]
fn inadmissible_highest_weight_is_a_config_error() {
    let o = hv(&["check", "axioms", "--family", "ind", "--params", r#"{"h":"1","c0":"2","c1":"0","c2":"1"}"#]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("admissible"));
}

#[test]
fn parse_errors_name_the_position() {
    let o = hv(&["act", "--family", "omega", "--params", OMEGA, "--gen", "L1", "--vec", "d"]);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("position 1") && err.contains('['), "{err}");
}

#[test]
fn json_report_shape() {
    let o = hv(&["check", "axioms", "--family", "intermediate", "--params", r#"{"gamma":"1/3","alpha":"2","beta":"1"}"#, "--format", "json", "--seed", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let keys: Vec<&str> = text
        .lines()
        .filter_map(|l| l.strip_prefix("  \""))
        .filter_map(|l| l.split('"').next())
        .collect();
    assert_eq!(keys, ["status", "checks", "counterexample", "version", "seed"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["seed"], 4);
    assert!(v["counterexample"].is_null());
}

#[test]
fn same_seed_same_output() {
    let args = ["check", "axioms", "--family", "mv", "--params", r#"{"lambda":"2","alpha":"1/2","beta":"3"}"#, "--seed", "11", "--format", "json"];
    let a = hv(&args);
    let b = hv(&args);
    assert_eq!(a.stdout, b.stdout);
    let c = hv(&["check", "axioms", "--family", "mv", "--params", r#"{"lambda":"2","alpha":"1/2","beta":"3"}"#, "--seed", "12", "--format", "json"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn t_operator_on_tensor_ground_is_nonzero() {
    let params = serde_json::to_string(&hv_cli::run::pipeline_params()).unwrap();
    let o = hv(&["verify", "t-operator", "--family", "tensor", "--params", &params, "--l", "-12", "--m", "-5", "--nonzero"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
