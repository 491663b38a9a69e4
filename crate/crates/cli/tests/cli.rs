use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zerohecke")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

#[test]
fn basis_42_pretty() {
    let o = run(&["basis", "--n", "4", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("dimension: 14"));
    assert!(s.contains("hilbert series: 1 + 4q + 6q^2 + 3q^3"));
    assert!(s.contains("buchberger = nonskip = staircase: true"));
    assert!(s.is_ascii());
}

#[test]
fn basis_33_artin_json() {
    let o = run(&["basis", "--n", "3", "--k", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dimension"], 6);
    assert_eq!(v["agree"], true);
    let got: Vec<&str> = v["buchberger"].as_array().unwrap().iter().map(|m| m.as_str().unwrap()).collect();
    // h_{n-i+1}(x_1..x_i) has leading term x_i^{n-i+1}, so the exponent of x_i stays below n-i+1
    for m in ["1", "x1", "x2", "x1^2", "x1*x2", "x1^2*x2"] {
        assert!(got.contains(&m), "{m} missing from {got:?}");
    }
}

#[test]
fn basis_csv_hilbert_table() {
    let o = run(&["basis", "--n", "4", "--k", "2", "--format", "csv"]);
    let s = stdout(&o);
    let rows: Vec<&str> = s.lines().collect();
    assert_eq!(rows[0], "degree,dimension,monomials");
    assert!(rows[1].starts_with("0,1,"));
    assert!(rows[4].starts_with("3,3,"));
}

#[test]
fn size_guard_and_usage_errors() {
    assert_eq!(run(&["basis", "--n", "9", "--k", "2"]).status.code(), Some(2));
    assert_eq!(run(&["basis", "--n", "3", "--k", "4"]).status.code(), Some(2));
    assert_eq!(run(&["basis", "--n", "3", "--k", "2", "--field", "Fp", "--p", "8"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n", "3", "--k", "2", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["characteristic", "--n", "8", "--k", "2"]).status.code(), Some(2));
}

#[test]
fn verify_all_42_json() {
    let o = run(&["verify", "--n", "4", "--k", "2", "--suite", "all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let checks = v.as_array().unwrap();
    assert!(checks.len() > 20);
    assert!(checks.iter().all(|c| c["pass"] == true && c["params"]["n"] == 4));
    let names: Vec<&str> = checks.iter().map(|c| c["check"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    let dec = checks.iter().find(|c| c["check"] == "modules.decomposition_quotient").unwrap();
    assert_eq!(dec["witness"]["computed"], "P[1,3] + P[2,2] + P[3,1] + 3*P[4]");
}

#[test]
fn verify_groebner_64_lists_kappas() {
    let o = run(&["verify", "--n", "6", "--k", "4", "--suite", "groebner", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let th = v.as_array().unwrap().iter().find(|c| c["check"] == "groebner.theorem").unwrap();
    assert_eq!(th["witness"]["kappa_indices"].as_array().unwrap().len(), 10);
    assert_eq!(th["witness"]["kappa_indices"][0], serde_json::json!([0, 0, 0, 1, 1, 1]));
}

#[test]
fn verify_over_prime_field() {
    let o = run(&["verify", "--n", "4", "--k", "3", "--field", "Fp", "--p", "7", "--suite", "pointsets"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 failed"));
    let o = run(&["verify", "--n", "4", "--k", "3", "--field", "Fp", "--p", "7", "--suite", "pointsets", "--format", "csv"]);
    assert!(stdout(&o).lines().nth(1).unwrap().contains(",Fp:7,"));
}

#[test]
fn characteristic_outputs() {
    let o = run(&["characteristic", "--n", "4", "--k", "2", "--which", "nsym"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(t)*R[1,3] + (t^2)*R[2,2] + (t^3)*R[3,1] + (1 + t + t^2)*R[4]"));
    let o = run(&["characteristic", "--n", "4", "--k", "2", "--which", "chqt"]);
    assert!(stdout(&o).contains("A=B: true"));
    let o = run(&["characteristic", "--n", "3", "--k", "3", "--which", "schur"]);
    let s = stdout(&o);
    assert!(s.contains("(1)*s[3]"));
    assert!(s.contains("(t + t^2)*s[2,1]"));
    assert!(s.contains("(t^3)*s[1,1,1]"));
}

#[test]
fn identical_runs_identical_bytes() {
    let args = ["verify", "--n", "4", "--k", "3", "--suite", "operators", "--seed", "7", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn out_file() {
    let dir = std::env::temp_dir().join(format!("zerohecke-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("basis.json");
    let o = run(&["basis", "--n", "3", "--k", "2", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["dimension"], 6);
    std::fs::remove_dir_all(&dir).unwrap();
}
