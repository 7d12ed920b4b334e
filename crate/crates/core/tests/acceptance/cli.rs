//! End-to-end runs of the `conic-mori` binary.

use std::process::Command;

use serde_json::{json, Value};

fn run(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_conic-mori")).args(args).output().expect("binary runs");
    let text = String::from_utf8(out.stdout).unwrap();
    let v = serde_json::from_str(&text).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v, text)
}

const DIAG: &str = r#"{"matrix":[[["1","0","0"],["0","0","0"]],[["0","0","0"],["0","1","0"]]]}"#;

#[test]
fn poincare_t4_three() {
    let (code, v, _) = run(&["poincare", "--space", "T4", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["poly"], json!(["1", "1", "2", "1", "1", "0", "1", "1", "1", "1"]));
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn poincare_other_spaces() {
    let (_, v, _) = run(&["poincare", "--space", "Gr", "--k", "2", "--n", "4"]);
    assert_eq!(v["poly"], json!(["1", "1", "2", "1", "1"]));
    let (_, v, _) = run(&["poincare", "--space", "MP2-4m+2"]);
    assert_eq!(v["poly"].as_array().unwrap().len(), 18);
    let (_, v, _) = run(&["poincare", "--space", "Sym2", "--n", "1"]);
    assert_eq!(v["poly"], json!(["1", "1", "1"]));
    let (_, v, _) = run(&["poincare", "--space", "MbarP", "--n", "3"]);
    assert_eq!(v["poly"], json!(["1", "2", "3", "3", "2", "1"]));
}

#[test]
fn stability_of_diagonal() {
    let dir = std::env::temp_dir().join(format!("conic-mori-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("diag_x0_x1.json");
    std::fs::write(&path, DIAG).unwrap();
    let (code, v, _) = run(&["stability", "--in", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "strictly_semistable");
    assert_eq!(v["closed_orbit"], true);
    assert_eq!(v["stabilizer"], "Cstar_Z2");
    let (_, v, _) = run(&["stratify", "--json", DIAG]);
    assert_eq!(v["stratum"], "Y1");
}

#[test]
fn chamber_lookup() {
    let (code, v, _) = run(&["chamber", "--coeffs", r#"{"T":"1","Delta":"1"}"#]);
    assert_eq!(code, 0);
    assert_eq!((v["case"].clone(), v["model"].clone()), (json!(4), json!("U")));
    assert_eq!(v["cell"], json!({"dim": 1, "generators": ["Delta", "T"]}));
    let (_, v, _) = run(&["chamber", "--coeffs", r#"{"P":"1","Dunb":"1","Ddeg":"1"}"#, "--n-mode", "eq3"]);
    assert_eq!((v["case"].clone(), v["model"].clone()), (json!(6), json!("Gr3Wedge2V")));
    let doc = r#"{"n_mode":"gt3","coeffs":{"P":"2","Ddeg":"3"}}"#;
    let (_, v, _) = run(&["chamber", "--json", doc]);
    assert_eq!(v["model"], "Gbar");
}

#[test]
fn conic_and_modify() {
    let generic = r#"{"matrix":[[["1","0","0","0"],["0","0","1","0"]],[["0","0","0","1"],["0","1","0","0"]]]}"#;
    let (code, v, _) = run(&["conic", "--json", generic]);
    assert_eq!(code, 0);
    assert_eq!((v["envelope_dim"].clone(), v["degree"].clone()), (json!(3), json!(2)));
    assert_eq!(v["coords"].as_object().unwrap().len(), 6);
    // Rank-drop family with n = 2, a = (1, 2), b = (3, -1)
    let fam = r#"{"matrix":[
        [[["1","0","0"]], [["0","0","0"],["0","1","2"]]],
        [[["0","0","0"],["0","3","-1"]], [["1","0","0"]]]]}"#;
    let (code, v, _) = run(&["modify", "--json", fam]);
    assert_eq!(code, 0);
    assert_eq!(v["k"], 1);
    assert_eq!(v["conic"]["coords"]["0,1"], json!(["3", "0", "-1"]));
    assert_eq!(v["conic"]["coords"]["0,2"], json!(["-1", "0", "-2"]));
    assert_eq!(v["conic"]["coords"]["1,2"], json!(["0", "0", "0"]));
}

#[test]
fn exit_codes() {
    let (code, v, _) = run(&["chamber", "--coeffs", r#"{"T":"0"}"#]);
    assert_eq!((code, v["error"].as_str()), (2, Some("ZeroDivisor")));
    let scalar = r#"{"matrix":[[["1","0","0"],["0","0","0"]],[["0","0","0"],["1","0","0"]]]}"#;
    let (code, v, _) = run(&["conic", "--json", scalar]);
    assert_eq!((code, v["error"].as_str()), (2, Some("ZeroConic")));
    let (code, v, _) = run(&["stability", "--json", "{not json"]);
    assert_eq!((code, v["error"].as_str()), (1, Some("ParseError")));
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 1);
}

#[test]
fn output_is_deterministic_and_reparses() {
    let a = run(&["stability", "--json", DIAG]).2;
    let b = run(&["stability", "--json", DIAG]).2;
    assert_eq!(a, b);
    let (_, v, _) = run(&["conic", "--json", DIAG]);
    let c = conic_mori::json::conic_from_json(&v).unwrap();
    assert_eq!(conic_mori::json::conic_to_json(&c)["coords"], v["coords"]);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("conic-mori-out-{}.json", std::process::id()));
    let (code, _, text) = run(&["poincare", "--space", "Pn", "--n", "2", "--out", path.to_str().unwrap()]);
    assert_eq!((code, text.as_str()), (0, ""));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["poly"], json!(["1", "1", "1"]));
}
