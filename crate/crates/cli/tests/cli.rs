use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rschemes")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden").join(name)
}

#[test]
fn check_exit_codes() {
    let ok = run(&["check", "--model", "ellipsoid", "--d", "3", "--scheme", "4u1", "--class", "M"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["verdict"], "pass");
    assert_eq!(json(&ok)["scheme"], "5");

    let fail = run(&["check", "--model", "ellipsoid", "--d", "3", "--scheme", "2u1<2>", "--class", "M"]);
    assert_eq!(fail.status.code(), Some(1));
    let v = json(&fail);
    let ell = v["reports"].as_array().unwrap().iter().find(|r| r["theorem"] == "ellipsoid").unwrap();
    assert_eq!((ell["lhs"].as_i64(), ell["verdict"].as_str()), (Some(1), Some("fail")));

    let syntax = run(&["check", "--model", "ellipsoid", "--d", "3", "--scheme", "2u1<2"]);
    assert_eq!(syntax.status.code(), Some(2));
    let e = json(&syntax);
    assert_eq!(e["code"], "syntax");
    assert_eq!(e["position"], 5);
}

#[test]
fn forced_type_i_exits_zero() {
    let out = run(&["check", "--model", "ellipsoid", "--d", "3", "--scheme", "1<1<1>>"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "forces-type-I");
}

#[test]
fn input_errors_are_json() {
    let cases: [&[&str]; 5] = [
        &["check", "--model", "plane", "--bidegree", "2,2", "--scheme", "1"],
        &["check", "--model", "ellipsoid", "--scheme", "1"],
        &["check", "--model", "ellipsoid", "--d", "3", "--scheme", "7"],
        &["check", "--model", "ellipsoid", "--d", "3", "--scheme", "1", "--filters", "nope"],
        &["classify", "--model", "ellipsoid", "--d", "3", "--class", "M-1"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let e = json(&out);
        assert!(e["code"].is_string() && e["message"].is_string(), "{args:?}");
    }
    let usage = run(&["check", "--scheme"]);
    assert_eq!(usage.status.code(), Some(2));
    assert_eq!(json(&usage)["code"], "usage");
}

#[test]
fn brown_examples() {
    let value = |form: &str| json(&run(&["brown", "--form", form]))["value"].clone();
    assert_eq!(value(r#"{"dim":0,"pairing":[],"values":[]}"#), 0);
    assert_eq!(value(r#"{"dim":1,"pairing":[[1]],"values":[1]}"#), 1);
    assert_eq!(value(r#"{"dim":1,"pairing":[[1]],"values":[3]}"#), 7);
    let degenerate = run(&["brown", "--form", r#"{"dim":1,"pairing":[[0]],"values":[2]}"#]);
    assert_eq!(degenerate.status.code(), Some(0));
    assert_eq!(json(&degenerate)["value"], "non-informative");
    let parity = run(&["brown", "--form", r#"{"dim":1,"pairing":[[1]],"values":[2]}"#]);
    assert_eq!((parity.status.code(), json(&parity)["code"].clone()), (Some(2), Value::from("form")));
    let missing = run(&["brown", "--file", "/nonexistent/form.json"]);
    assert_eq!(missing.status.code(), Some(3));
}

#[test]
fn integral_examples() {
    let one = run(&["integral", "--model", "plane", "--d", "2", "--scheme", "1+"]);
    assert_eq!(json(&one)["integral"]["value"], 1);
    let nest = run(&["integral", "--model", "plane", "--d", "4", "--scheme", "1+<1+>"]);
    assert_eq!((nest.status.code(), json(&nest)["integral"]["value"].clone()), (Some(0), Value::from(4)));
    let twisted = run(&["integral", "--model", "plane", "--d", "4", "--scheme", "1-<1+>"]);
    assert_eq!(twisted.status.code(), Some(1));
    assert_eq!(json(&twisted)["check"]["verdict"], "fail");
    let unoriented = run(&["integral", "--model", "plane", "--d", "4", "--scheme", "1<1>"]);
    assert_eq!(unoriented.status.code(), Some(2));
    assert_eq!(json(&unoriented)["code"], "unoriented");
}

#[test]
fn enumerate_and_regions() {
    let out = json(&run(&["enumerate", "--ovals", "3"]));
    assert_eq!(out, serde_json::json!(["1<1<1>>", "1<2>", "1u1<1>", "3"]));
    let r = json(&run(&["regions", "--model", "ellipsoid", "--d", "3", "--scheme", "2u1<2>"]));
    assert_eq!((r["coloring"]["chi1"].as_i64(), r["coloring"]["chi2"].as_i64()), (Some(1), Some(1)));
    assert_eq!(r["chi_rb"], 2);
}

#[test]
fn golden_tables() {
    for (name, args) in [
        ("cubic.json", vec!["classify", "--model", "cubic-disjoint"]),
        ("ellipsoid33.json", vec!["classify", "--model", "ellipsoid", "--d", "3"]),
        ("empty.json", vec!["classify", "--model", "ellipsoid", "--d", "3", "--ovals", "0"]),
    ] {
        let path = golden(name);
        let expected = std::fs::read_to_string(&path).unwrap();
        let out = run(&args);
        assert_eq!(String::from_utf8(out.stdout).unwrap(), expected, "{name}");
        let mut with_golden = args.clone();
        let p = path.to_str().unwrap();
        with_golden.extend(["--golden", p]);
        assert_eq!(run(&with_golden).status.code(), Some(0), "{name}");
    }
}

#[test]
fn golden_drift_and_io_errors() {
    let stored = std::fs::read_to_string(golden("cubic.json")).unwrap();
    let path = std::env::temp_dir().join(format!("rschemes-drift-{}.json", std::process::id()));
    std::fs::write(&path, stored.replacen("\"admissible\": true", "\"admissible\": false", 1)).unwrap();
    let out = run(&["classify", "--model", "cubic-disjoint", "--golden", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(1));
    let missing = run(&["classify", "--model", "cubic-disjoint", "--golden", "/nonexistent/golden.json"]);
    assert_eq!((missing.status.code(), json(&missing)["code"].clone()), (Some(3), Value::from("io")));
}

#[test]
fn cubic_golden_content() {
    let rows: Value = serde_json::from_str(&std::fs::read_to_string(golden("cubic.json")).unwrap()).unwrap();
    let listed = rows
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| {
            r["admissible"] == true && r["notes"].as_array().unwrap().contains(&Value::from("in reference list"))
        })
        .count();
    assert_eq!(listed, 8);
    let ell: Value = serde_json::from_str(&std::fs::read_to_string(golden("ellipsoid33.json")).unwrap()).unwrap();
    assert!(ell.as_array().unwrap().iter().any(|r| r["scheme"] == "1<1<1>>"));
    let empty: Value = serde_json::from_str(&std::fs::read_to_string(golden("empty.json")).unwrap()).unwrap();
    assert_eq!(empty.as_array().unwrap().len(), 1);
    assert_eq!(empty[0]["scheme"], "0");
}

#[test]
fn output_is_deterministic() {
    let args = ["classify", "--model", "ellipsoid", "--d", "3", "--format", "table"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let seq = run(&["classify", "--model", "ellipsoid", "--d", "3", "--sequential"]);
    let par = run(&["classify", "--model", "ellipsoid", "--d", "3"]);
    assert_eq!(seq.stdout, par.stdout);
}

#[test]
fn m55_budget_run() {
    let out = run(&["classify", "--model", "ellipsoid", "--d", "5", "--class", "M", "--budget", "2000", "--summary"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["enumerated"].as_u64(), v["truncated"].as_bool()), (Some(2000), Some(true)));
    assert_eq!(v["reference_count"], 18);
}
