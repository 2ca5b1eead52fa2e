//! End-to-end runs of the `ttg` binary.

use std::path::PathBuf;
use std::process::Command;

use serde_json::{json, Value};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn ttg(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ttg")).args(args).output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let stderr = String::from_utf8(out.stderr).unwrap();
    let code = out.status.code().unwrap();
    let text = if code == 2 { &stderr } else { &stdout };
    let v = serde_json::from_str(text).unwrap_or(Value::Null);
    (code, v, stderr)
}

fn success(args: &[&str]) -> Value {
    let (code, v, err) = ttg(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    v
}

fn domain_error(args: &[&str]) -> String {
    let (code, v, err) = ttg(args);
    assert_eq!(code, 1, "{args:?}: {err}");
    v["error"]["code"].as_str().expect("error code").to_string()
}

#[test]
fn finite_group_from_file() {
    let g = format!("Finite:{}", data("s4.txt"));
    assert_eq!(success(&["group", "load", "--group", &g]), json!({ "order": 24, "class_count": 11, "valid": true }));
    let m = success(&["burnside", "marks", "--group", &g]);
    assert_eq!(m["marks"].as_array().map(Vec::len), Some(11));
    let e = success(&["burnside", "idempotent", "--group", &g, "F10"]);
    assert_eq!(e["coefficients"].as_array().unwrap().last(), Some(&json!("1/1")));
}

#[test]
fn restriction_and_orders() {
    let r = success(&["restrict", "--group", "SO3", "O2", "C2"]);
    assert_eq!(r, json!({ "model": "O2", "classes": ["C2", "D1"] }));
    assert_eq!(success(&["cotoral", "--group", "O2", "C4", "SO2"]), json!({ "cotoral": true }));
    assert_eq!(success(&["subconj", "--group", "SO3", "D2", "S4"]), json!({ "subconjugate": true }));
    assert_eq!(success(&["balmer", "leq", "--group", "Circle", "C3", "T"]), json!({ "leq": true }));
    let c = success(&["balmer", "closure", "--group", "O2", "SO2"]);
    assert_eq!(c["closure"]["descriptor"], "{SO2}+tailC(1)");
}

#[test]
fn phi_and_clopen_sets() {
    let p = success(&["phi", "show", "--group", "O2"]);
    assert_eq!(p["components"][0]["sequence"]["limit"], "O2");
    let u = success(&["clopen", "union", "--group", "O2", "O2+tailD(4)", "{D1}"]);
    assert_eq!(u["descriptor"], "{D1,O2}+tailD(4)");
    let c = success(&["clopen", "complement", "--group", "O2", "O2+tailD(4)"]);
    assert_eq!(c["descriptor"], "{D1,D2,D3,SO2}");
    assert_eq!(domain_error(&["clopen", "complement", "--group", "O2", "{O2}"]), "MalformedDescriptor");
}

#[test]
fn supports_and_realization() {
    let s = success(&["support", "--group", "O2", "basic(O2,2)"]);
    assert_eq!(s["support"]["descriptor"], "{O2}+tailD(2)");
    let m = success(&["ctmax", "--group", "O2", "cell(O2)"]);
    assert_eq!(m["ctmax"]["descriptor"], "{SO2,O2}+tailD(1)");
    assert_eq!(success(&["realizable", "--group", "O2", "tailD(3)"]), json!({ "realizable": false }));
    let r = success(&["realize", "--group", "O2", "O2+tailD(3)+{D1}"]);
    assert_eq!(r["expr"], "wedge(basic(O2,3),basic(D1,1))");
    assert_eq!(domain_error(&["realize", "--group", "O2", "tailD(3)"]), "NotRealizable");
    let z = success(&["closure", "--group", "SO3", "tailD(4)"]);
    assert_eq!(z["closure"]["descriptor"], "{O2}+tailD(4)");
    assert_eq!(z["closed"], false);
    let sep = success(&["separate", "--group", "SO3", "O2", "A5"]);
    assert_eq!(sep["x1"]["expr"], "basic(O2,1)");
    assert_eq!(domain_error(&["separate", "--group", "O2", "C2", "SO2"]), "NotUnrelated");
}

#[test]
fn ideal_membership() {
    assert_eq!(success(&["thickt", "--group", "SO3", "cell(D2)", "cell(A4)"]), json!({ "in_thickt": true }));
    assert_eq!(domain_error(&["thickt", "--group", "SO3", "iso(D2)", "S0"]), "NotFinite");
    assert_eq!(
        success(&["loct-eq", "--group", "O2", "wedge(iso(SO2),iso(D2))", "wedge(iso(D2),iso(SO2))"]),
        json!({ "loct_equal": true })
    );
    assert_eq!(domain_error(&["support", "--group", "O2", "cell(A5)"]), "MalformedExpr");
}

#[test]
fn semifree_commands() {
    let check = success(&["semifree", "check", "--file", &data("m_f.json")]);
    assert_eq!(check["untwisted"], true);
    let check = success(&["semifree", "check", "--file", &data("sz_wedge.json")]);
    assert_eq!((check["untwisted"].clone(), check["p_fixed"].clone()), (json!(false), json!("1+t^2")));
    let iso = success(&["semifree", "iso", "--file", &data("sz_wedge.json"), "--file", &data("m_f.json")]);
    assert_eq!(iso, json!({ "isomorphic": false }));
    let c = success(&["semifree", "classes", "--poly", "1+t^2"]);
    assert_eq!(c["count"], 3);
    assert_eq!(domain_error(&["semifree", "classes", "--poly", "1+t^2+t^4"]), "ContinuousModuli");
    let a = success(&["semifree", "attach", "--file", &data("s0.json"), "--degree", "1", "--class", "1"]);
    assert_eq!(a["dim"], 1);
    assert_eq!(a["cofibre"]["untwisted"], true);
    let t = success(&["semifree", "twist", "--file", &data("s0.json"), "--k", "-2"]);
    assert_eq!(t["k_twisted"], false);
    assert_eq!(t["smashed"]["even"]["window"], json!([-4, -4]));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["frobnicate"],
        vec!["support", "--group", "O2"],
        vec!["support", "--group", "Q8", "S0"],
        vec!["semifree", "iso", "--file", "a.json"],
    ] {
        assert_eq!(ttg(&args).0, 2, "{args:?}");
    }
    assert_eq!(domain_error(&["group", "load", "--group", "Finite:/nonexistent/table.txt"]), "IoError");
}
