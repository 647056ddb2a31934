use std::path::PathBuf;
use std::process::{Command, Output};

use cherednik_core::{FactoredScalar, ParamPoint};
use serde_json::{json, Value};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cherednik"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_json(args: &[&str]) -> (Value, i32) {
    let out = run(&[args, &["--format", "json"]].concat());
    let v = serde_json::from_slice(&out.stdout).expect("json on stdout");
    (v, out.status.code().unwrap())
}

const HALF: &str = r#"{"r":1,"kappa":"1","c0":"1/2","d":["0"]}"#;
const FIFTH: &str = r#"{"r":2,"kappa":"1","c0":"1/5","d":["3/2","-3/2"]}"#;

#[test]
fn spectrum_row_column_violation() {
    let (v, code) = run_json(&["spectrum", "--shape", "[[2,1]]", "--point", HALF]);
    assert_eq!(code, 0);
    assert_eq!(v["simple"], json!(false));
    assert_eq!(v["violations"], json!([{ "family": "row-column", "l": 0, "m": 2, "k": 1 }]));
}

#[test]
fn findim_single_box() {
    let (v, code) = run_json(&["findim", "--shape", "[[1],[]]", "--point", FIFTH]);
    assert_eq!(code, 0);
    assert_eq!(v["finite"], json!(true));
    assert_eq!(v["dim"], json!(3));
    assert_eq!(v["graded"], json!([1, 1, 1]));
    assert_eq!(v["certificate"]["bound"], json!(3));
}

#[test]
fn verify_generic_row() {
    let (v, code) = run_json(&["verify", "--shape", "[[2]]", "--point", "generic", "--maxdeg", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["all_pass"], json!(true));
    assert_eq!(v["point_source"]["mode"], json!("generic"));
    assert_eq!(v["point_source"]["seed"], json!(0));
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] != json!("fail")));
}

#[test]
fn irreducible_message() {
    let out = run(&["generators", "--shape", "[[2,1]]", "--point", "generic", "--seed", "3"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("M(λ) is irreducible at this point"));
}

#[test]
fn exit_codes() {
    let out = run(&["findim", "--config", fixture("rank_five.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let (v, code) = run_json(&["generators", "--config", fixture("rank_five.json").to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["reason"], json!("spectrum_not_simple"));
    assert_eq!(run(&["syt", "--shape", "[[2,1]"]).status.code(), Some(1));
    assert_eq!(run(&["spectrum", "--shape", "[[2,1]]"]).status.code(), Some(1));
    assert_eq!(run(&["nonsense"]).status.code(), Some(1));
    let bad_d = r#"{"r":2,"kappa":"1","c0":"1/5","d":["1","1"]}"#;
    assert_eq!(run(&["spectrum", "--shape", "[[1],[]]", "--point", bad_d]).status.code(), Some(1));
    let kappa = r#"{"r":2,"kappa":"2","c0":"1/5","d":["3/2","-3/2"]}"#;
    assert_eq!(run(&["findim", "--shape", "[[1],[]]", "--point", kappa]).status.code(), Some(2));
}

#[test]
fn deterministic_json() {
    let args = ["lattice", "--shape", "[[2,1]]", "--point", "generic", "--seed", "11", "--format", "json"];
    let a = run(&args).stdout;
    let b = run(&args).stdout;
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    let keys: Vec<usize> = ["\"command\"", "\"generators\"", "\"maxdeg\"", "\"point\"", "\"quotient\""]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn json_round_trips() {
    let (v, _) = run_json(&["norm", "--shape", "[[1],[1]]", "--mu", "[2,1]", "--point", "generic"]);
    let p: ParamPoint = serde_json::from_value(v["point"].clone()).unwrap();
    assert_eq!(p.r(), 2);
    for e in v["norms"].as_array().unwrap() {
        let f: FactoredScalar = serde_json::from_value(e["norm"].clone()).unwrap();
        assert_eq!(f.to_string(), e["text"].as_str().unwrap());
        assert_eq!(f.eval(&p).unwrap().to_string(), e["value"].as_str().unwrap());
    }
}

#[test]
fn config_file_and_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("job.json");
    std::fs::write(&path, r#"{"shape": [[2],[]], "point": "generic", "seed": 5, "maxdeg": 2}"#).unwrap();
    let cfg = path.to_str().unwrap();
    let (v, code) = run_json(&["lattice", "--config", cfg]);
    assert_eq!(code, 0);
    assert_eq!(v["total"].as_array().unwrap().len(), 3);
    let (w, _) = run_json(&["lattice", "--config", cfg, "--maxdeg", "4"]);
    assert_eq!(w["total"].as_array().unwrap().len(), 5);
    assert_eq!(w["point"], v["point"]);
    let (s, _) = run_json(&["syt", "--config", fixture("single_box.json").to_str().unwrap(), "--list"]);
    assert_eq!(s["count"], json!(1));
}

#[test]
fn weights_and_tableau_selectors() {
    let (v, code) = run_json(&["weights", "--shape", "[[2,1]]", "--mu", "1,0,0", "--tableau", "[[[1,2],[3]]]"]);
    assert_eq!(code, 0);
    let entries = v["weights"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0]["tableau"], json!([[[1, 2], [3]]]));
    let (all, _) = run_json(&["weights", "--shape", "[[2,1]]"]);
    assert_eq!(all["weights"].as_array().unwrap().len(), 2);
    assert_eq!(run(&["weights", "--shape", "[[2,1]]", "--tableau", "7"]).status.code(), Some(1));
}

#[test]
fn clifford_split_report() {
    let point = r#"{"r":2,"kappa":"1","c0":"3/2","d":["0","0"]}"#;
    let (v, code) = run_json(&["clifford", "--shape", "[[2],[]]", "--point", point, "--pdiv", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["l_graded"], json!([1, 2, 3, 2, 1]));
    assert_eq!(v["clifford"]["orbit_k"], json!(2));
    assert_eq!(v["clifford"]["num_summands"], json!(1));
    assert_eq!(v["clifford"]["graded_dims_per_summand"], json!([1, 2, 3, 2, 1]));
    let fixed = r#"{"r":2,"kappa":"1","c0":"1/5","d":["0","0"]}"#;
    let (w, code) = run_json(&["clifford", "--shape", "[[1],[1]]", "--point", fixed, "--pdiv", "2"]);
    assert_eq!(code, 2);
    assert_eq!(w["error"]["reason"], json!("not_proven"));
    assert_eq!(run(&["clifford", "--shape", "[[2],[]]", "--point", point]).status.code(), Some(1));
}
