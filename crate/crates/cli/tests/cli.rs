use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_upqn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn classify_examples() {
    let o = run(&["classify", "--signature", "1,1,1", "--weight", "-3,1;1/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o), serde_json::json!({"unitary": true, "condition": "U1"}));

    let o = run(&["classify", "--signature", "1,1,1", "--weight", "0,0;0"]);
    assert_eq!(json(&o), serde_json::json!({"unitary": true, "condition": "U6", "i": 1, "j": 1}));

    let o = run(&["classify", "--signature", "1,1,1", "--weight", "0,0;1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o), serde_json::json!({"unitary": false}));
}

#[test]
fn classify_gamma_bound() {
    let o = run(&["classify", "--signature", "1,1,1", "--weight", "-3,1;1/2", "--gamma-cap", "4"]);
    assert_eq!(json(&o)["gamma_bound"]["status"], "evidence_positive_at_cap");
    let o = run(&["classify", "--signature", "1,1,1", "--weight", "0,0;1", "--gamma-cap", "2"]);
    let v = json(&o);
    assert_eq!(v["unitary"], false);
    assert_eq!(v["gamma_bound"]["status"], "inconclusive");
    assert_eq!(v["gamma_bound"]["gamma"], "2");
}

#[test]
fn classify_input_errors() {
    let o = run(&["classify", "--signature", "2,1,1", "--weight", "0,1/2,0;0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("lambda_1 - lambda_2"));
    assert_eq!(run(&["classify", "--signature", "1,1,1", "--weight", "1,x;0"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--signature", "1,1", "--weight", "0;0"]).status.code(), Some(2));
}

#[test]
fn classify_modes() {
    let lw = run(&["classify", "--signature", "1,1,1", "--weight", "3,-1;-1/2", "--mode", "lw-dual"]);
    assert_eq!(json(&lw)["condition"], "U1");
    let int = run(&["classify", "--signature", "1,1,1", "--weight", "0,0;0", "--mode", "integral"]);
    assert_eq!(json(&int)["unitary"], true);
    let fin = run(&["classify", "--signature", "1,0,1", "--weight", "1;0", "--mode", "finite-t1"]);
    assert_eq!(fin.status.code(), Some(0));
    assert!(json(&fin)["unitary"].is_boolean());
}

#[test]
fn scan_row_counts() {
    let o = run(&["scan", "--signature", "1,1,1", "--range=-3:0", "--range=0:2", "--range=0:2"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("signature,weight,dominant,unitary,condition,i,mu,j,oracle_agreement"));
    assert_eq!(lines.count(), 36);
    let o = run(&["scan", "--signature", "1,1,1", "--range=-3:0:1/2", "--range=0:2", "--range=0:2"]);
    assert_eq!(stdout(&o).lines().count() - 1, 7 * 9);
    assert_eq!(run(&["scan", "--signature", "1,1,1", "--range=1:0", "--range=0:2", "--range=0:2"]).status.code(), Some(2));
}

#[test]
fn scan_is_deterministic_and_agrees_with_oracle() {
    let args = ["scan", "--signature", "1,1,1", "--range=-2:0:1/2", "--range=0:1", "--range=0:1", "--height-cap", "3"];
    let a = run(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_upqn"))
        .args(args)
        .env("UPQN_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    for line in stdout(&a).lines().skip(1) {
        let cols: Vec<&str> = line.rsplit(',').collect();
        assert_eq!(cols[0], "true", "{line}");
    }
    let j = run(&["scan", "--signature", "1,1,1", "--range=-1:0", "--range=0:0", "--range=0:0", "--format", "json"]);
    assert_eq!(json(&j).as_array().unwrap().len(), 2);
}

#[test]
fn gram_exit_codes() {
    let o = run(&["gram", "--signature", "1,1,1", "--weight", "0,0;1", "--max-height", "2"]);
    assert_eq!(o.status.code(), Some(3));
    let v = json(&o);
    assert_eq!(v["verdict"], "negative_witness");
    assert_eq!(v["witness"]["drop"], "eps1-delta1");
    assert!(v["witness"]["norm"].as_str().unwrap().starts_with('-'));

    let o = run(&["gram", "--signature", "1,1,1", "--weight", "0,0;0", "--max-height", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["gram", "--signature", "1,1,1", "--weight", "-3,1;1/2", "--max-height", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verdict"], "psd_up_to_cap");
}

#[test]
fn howe_examples() {
    let o = run(&["howe", "--d", "1", "--signature", "1,1,1", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o).as_array().unwrap().iter().all(|p| p["verified"] == true));

    let o = run(&["howe", "--d", "1", "--signature", "1,1,1", "--max-degree", "0"]);
    let v = json(&o);
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["partition"], serde_json::json!([0]));

    let o = run(&["howe", "--d", "2", "--signature", "1,1,1", "--max-degree", "2"]);
    let v = json(&o);
    let pair = v.as_array().unwrap().iter().find(|p| p["partition"] == serde_json::json!([2, 0])).unwrap();
    assert_eq!(pair["flat"], "-2,2;0");

    let o = run(&["howe", "--d", "2", "--signature", "2,2,2", "--max-degree", "30"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn selftest_passes_and_is_reproducible() {
    let a = run(&["selftest", "--seed", "5", "--samples", "500"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    let b = run(&["selftest", "--seed", "5", "--samples", "500"]);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["selftest", "--seed", "6", "--samples", "500"]);
    assert_eq!(c.status.code(), Some(0));
    assert_ne!(a.stdout, c.stdout);
}
