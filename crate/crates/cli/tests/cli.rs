use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_block-atlas")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn documented_examples_verbatim() {
    assert_eq!(stdout(&["gamma", "A3"]), r#"{"group":"Z4"}"#);
    assert_eq!(
        stdout(&["same-block", "A1", r#"{"factors":[{"point":{"rat":[1,1]},"weight":[2]}]}"#, r#"{"factors":[]}"#]),
        r#"{"same_block":true}"#
    );
    assert_eq!(stdout(&["chain", "A1", "[5]"]), r#"{"chain":[[5],[3],[1]],"certified":true}"#);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["gamma", "Q7"]).status.code(), Some(1));
    assert_eq!(run(&["chain", "A2", "[1,"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    let out = run(&["chain-between", "A1", "[1]", "[2]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not in the same Q-coset"));
    assert!(out.stdout.is_empty());
    assert_eq!(run(&["chain", "A2", "[-1,0]"]).status.code(), Some(2));
    assert_eq!(run(&["factor", "A1", r#"{"coeffs":[[2,1]]}"#]).status.code(), Some(2));
    assert_eq!(run(&["module-lab", "A1", "ext", "--lambda", "[1]", "--mu", "[4]", "--point", "1"]).status.code(), Some(2));
}

#[test]
fn emitted_chains_reverify() {
    for (t, w) in [("B3", "[1,1,1]"), ("D4", "[1,0,1,1]"), ("E6", "[0,1,0,0,1,0]"), ("G2", "[2,1]")] {
        let out = json(&["chain", t, w, "--certify"]);
        assert_eq!(out["certified"], Value::Bool(true));
        let reload = out["chain"].to_string();
        assert_eq!(json(&["verify-chain", t, &reload])["valid"], Value::Bool(true), "{t}");
    }
    let between = json(&["chain-between", "A2", "[2,0]", "[0,1]"]);
    let chain = between["chain"].as_array().unwrap();
    assert_eq!(chain.first().unwrap().to_string(), "[2,0]");
    assert_eq!(chain.last().unwrap().to_string(), "[0,1]");
}

#[test]
fn invalid_chain_is_reported_not_fatal() {
    let out = json(&["verify-chain", "G2", "[[1,0],[0,0]]"]);
    assert_eq!(out["valid"], Value::Bool(false));
}

#[test]
fn tuple_commands() {
    let f = json(&["factor", "A1", r#"{"coeffs":[[1,-3,2]]}"#]);
    assert_eq!(f["factors"].as_array().unwrap().len(), 2);
    let chi = json(&["char", "A1", r#"{"coeffs":[[1,-3,2]]}"#]);
    assert_eq!(chi["character"].as_array().unwrap().len(), 2);
    let label = json(&["block-label", "A1", r#"{"factors":[{"point":{"sym":"a"},"weight":[3]}]}"#]);
    assert_eq!(label["block_label"][0]["weight"].to_string(), "[1]");
    let dual = json(&["dual", "A2", r#"{"factors":[{"point":{"rat":[1,2]},"weight":[1,0]}]}"#]);
    assert_eq!(dual["factors"][0]["weight"].to_string(), "[0,1]");
    assert_eq!(json(&["project", "D5", "[0,0,0,0,1]"])["class"].to_string(), "[1]");
    assert_eq!(json(&["lambda-gamma", "A3", "[2]"])["lambda_gamma"].to_string(), "[2,0,0]");
}

#[test]
fn oracle_commands() {
    assert_eq!(json(&["dim", "G2", "[0,1]"])["dim"], 14);
    assert_eq!(json(&["tensor-mult", "A1", "[1]", "[3]"])["multiplicity"], 1);
    assert_eq!(json(&["tensor-mult", "A1", "[1]", "[4]"])["multiplicity"], 0);
    let dec = json(&["tensor-mult", "A1", "[1]"]);
    assert_eq!(dec["decomposition"].as_array().unwrap().len(), 2);
    let ws = json(&["weights", "A2", "[1,1]", "--all"]);
    assert_eq!(ws["dim"], 8);
    assert_eq!(ws["weights"].as_array().unwrap().len(), 7);
}

#[test]
fn module_lab_reports() {
    let ext = json(&["module-lab", "A1", "ext", "--lambda", "[3]", "--mu", "[1]", "--point", "2"]);
    assert_eq!(ext["dim"], 6);
    for key in ["lie_action", "nonsplit", "quotient_is_evaluation", "jet_annihilator", "witness_is_submodule"] {
        assert_eq!(ext[key], Value::Bool(true), "{key}");
    }
    assert_eq!(ext["character"][0]["class"].to_string(), "[1]");

    let distinct = json(&["module-lab", "A1", "tensor", "--lambda", "[1]", "--point", "1", "--lambda", "[1]", "--point", "-1/2"]);
    assert_eq!(distinct["irreducibility"], "irreducible");
    let same = json(&["module-lab", "A1", "tensor", "--lambda", "[1]", "--point", "3", "--lambda", "[1]", "--point", "3"]);
    assert_eq!(same["witness_dim"], 3);

    let bundle = json(&["module-lab", "A1", "eval", "--lambda", "[1]", "--point", "2", "--export"]);
    assert_eq!(bundle["bundle"]["dim"], 2);
    assert_eq!(bundle["bundle"]["generators"].as_array().unwrap().len(), 15);
}

#[test]
fn dimension_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_block-atlas"))
        .args(["module-lab", "A1", "eval", "--lambda", "[5]", "--point", "1"])
        .env("BLOCK_ATLAS_DIM_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["module-lab", "A2", "tensor", "--lambda", "[1,0]", "--point", "1", "--lambda", "[0,1]", "--point", "1", "--seed", "9"];
    assert_eq!(stdout(&args), stdout(&args));
    assert_eq!(stdout(&["chain", "E6", "[1,1,0,0,0,0]"]), stdout(&["chain", "E6", "[1,1,0,0,0,0]"]));
}

#[test]
fn pretty_output_is_a_table() {
    let text = stdout(&["gamma", "D6", "--pretty"]);
    assert_eq!(text, r#"group  "Z2xZ2""#);
}
