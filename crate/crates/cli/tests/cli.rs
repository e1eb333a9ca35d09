use std::path::PathBuf;
use std::process::Command;

use qalg_cli::format::parse_algebra_file;
use serde_json::Value;

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn qalg(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qalg")).args(args).output().expect("run qalg");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json_run(args: &[&str]) -> (i32, Value) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let mut all: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap().to_string();
    all.extend(["--json", &p]);
    let (code, _, _) = qalg(&all);
    let text = std::fs::read_to_string(&path).unwrap();
    (code, serde_json::from_str(&text).unwrap())
}

#[test]
fn corpus_files_parse_to_expected_dimensions() {
    let expect = [("a1", 1), ("a2", 3), ("a3", 6), ("a4", 10), ("n2", 2), ("n3", 3), ("kronecker", 4)];
    for (name, dim) in expect {
        let text = std::fs::read_to_string(corpus(&format!("{}.alg", name))).unwrap();
        let alg = parse_algebra_file(&text, None).unwrap().build().unwrap();
        assert_eq!(alg.dimension(), dim, "{}", name);
    }
}

#[test]
fn verify_ausl_n2_subset() {
    let a = corpus("ausl_n2.alg");
    let (code, v) = json_run(&["verify", a.to_str().unwrap(), "--claims", "T1,T3,T4"]);
    assert_eq!(code, 0);
    let ids: Vec<&str> = v["results"]["claims"].as_array().unwrap().iter().map(|c| c["claim"].as_str().unwrap()).collect();
    assert_eq!(ids, ["T1", "T3", "T4"]);
    assert_eq!(v["results"]["summary"]["fail"], 0);
}

#[test]
fn unknown_claim_is_a_usage_error() {
    let a = corpus("a2.alg");
    let (code, _, err) = qalg(&["verify", a.to_str().unwrap(), "--claims", "T1,NOPE"]);
    assert_eq!(code, 2);
    assert!(err.contains("NOPE"));
}

#[test]
fn kronecker_completeness_flag() {
    let k = corpus("kronecker.alg");
    let (code, v) = json_run(&["analyze", k.to_str().unwrap()]);
    assert_eq!(code, 0);
    let ind = &v["results"]["indecomposables"];
    assert_eq!(ind["completeness"], "cap_exceeded");
    assert!(ind.get("count").is_none());
    let (code, _, _) = qalg(&["analyze", k.to_str().unwrap(), "--require-certified", "--cap-count", "20"]);
    assert_eq!(code, 3);
    // Commands that need the full list refuse outright.
    let (code, _, _) = qalg(&["tilting", k.to_str().unwrap(), "--cap-count", "20"]);
    assert_eq!(code, 3);
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.alg");
    std::fs::write(&f, "field rational\nvertices 2\narrow a 1 2\nrelation a*b\n").unwrap();
    let (code, v) = json_run(&["analyze", f.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["results"]["error"]["kind"], "parse_error");
    assert_eq!(v["results"]["error"]["message"], "line 4: undeclared arrow 'b'");
}

#[test]
fn report_envelope() {
    let a = corpus("a3.alg");
    let (code, v) = json_run(&["analyze", a.to_str().unwrap(), "--seed", "7", "--cap-resolution", "5"]);
    assert_eq!(code, 0);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["tool_version", "input_digest", "results", "flags"]);
    assert!(v["input_digest"].as_str().unwrap().starts_with("sha256:"));
    assert_eq!(v["flags"]["seed"], 7);
    assert_eq!(v["flags"]["cap_resolution"], 5);
    assert_eq!(v["results"]["global_dimension"], 1);
    assert_eq!(v["results"]["dominant_dimension"], 1);
    let n3 = corpus("n3.alg");
    let (_, v) = json_run(&["analyze", n3.to_str().unwrap()]);
    assert_eq!(v["results"]["global_dimension"], "exceeds_cap");
    assert_eq!(v["results"]["dominant_dimension"], "at_least_cap");
}

#[test]
fn field_override() {
    let a = corpus("a2.alg");
    let (code, v) = json_run(&["analyze", a.to_str().unwrap(), "--field", "gf7"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["algebra"]["field"], "gf 7");
    assert_eq!(v["flags"]["field"], "gf 7");
    let (code, _, _) = qalg(&["analyze", a.to_str().unwrap(), "--field", "gf6"]);
    assert_eq!(code, 2);
}

#[test]
fn emitted_presentations_match_corpus() {
    let dir = tempfile::tempdir().unwrap();
    for base in ["a2", "a3", "n2", "n3"] {
        let out = dir.path().join(format!("ausl_{}.alg", base));
        let (code, _, _) = qalg(&["auslander", corpus(&format!("{}.alg", base)).to_str().unwrap(), "--emit", out.to_str().unwrap()]);
        assert_eq!(code, 0);
        let fresh = std::fs::read_to_string(&out).unwrap();
        let stored = std::fs::read_to_string(corpus(&format!("ausl_{}.alg", base))).unwrap();
        assert_eq!(fresh, stored, "{}", base);
    }
}

#[test]
fn auslander_invariants() {
    let (code, v) = json_run(&["auslander", corpus("n2.alg").to_str().unwrap()]);
    assert_eq!(code, 0);
    let r = &v["results"];
    assert_eq!(r["algebra"]["dimension"], 5);
    assert_eq!(r["invariants"]["global_dimension"], 2);
    assert_eq!(r["invariants"]["dominant_dimension"], 2);
    assert_eq!(r["invariants"]["is_auslander"], true);
    // Kronecker has no Auslander algebra within caps.
    let (code, _, _) = qalg(&["auslander", corpus("kronecker.alg").to_str().unwrap(), "--cap-count", "20"]);
    assert_eq!(code, 3);
}

#[test]
fn tilting_enumeration_and_file_modules() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("a3m.alg");
    let text = std::fs::read_to_string(corpus("a3.alg")).unwrap()
        + "module T\n  dim 1,1,2\n  map a [[1]]\n  map b [[1],[0]]\nmodule S\n  dim 0,1,0\n";
    std::fs::write(&f, text).unwrap();
    let (code, v) = json_run(&["tilting", f.to_str().unwrap(), "--enumerate", "--check-hereditary-property"]);
    assert_eq!(code, 0);
    let r = &v["results"];
    assert_eq!(r["tilting_modules"]["count"], 5);
    for m in r["tilting_modules"]["modules"].as_array().unwrap() {
        assert_eq!(m["tilting"], true);
        assert_eq!(m["hereditary_property"]["holds"], true);
    }
    // T = P(1) ⊕ S(3) has two summands over three vertices: partial tilting only.
    let t = &r["modules"][0];
    assert_eq!(t["name"], "T");
    assert_eq!(t["summands"].as_array().unwrap().len(), 2);
    assert_eq!(t["partial_tilting"], true);
    assert_eq!(t["tilting"], false);
    assert_eq!(r["modules"][1]["name"], "S");
}

#[test]
fn text_output_mirrors_json() {
    let a = corpus("a2.alg");
    let (code, text, _) = qalg(&["analyze", a.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(text.starts_with("tool_version: "));
    assert!(text.contains("\n  global_dimension: 1\n"));
}
