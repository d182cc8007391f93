use std::process::{Command, Output};

fn cayley(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley")).args(args).output().expect("spawn cayley")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn bds_passes_with_schema() {
    let out = cayley(&["verify-bds", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["checks"].as_array().unwrap().len(), 3);
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn json_reports_are_byte_stable() {
    let a = cayley(&["verify-chain", "--format", "json", "--seed", "5"]);
    let b = cayley(&["verify-chain", "--format", "json", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["seed"], 5);
}

#[test]
fn markdown_is_the_default() {
    let out = cayley(&["verify-nonpolar"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("## verify-nonpolar"));
    assert!(text.contains("| check | anchor | basis | expected | computed | result |"));
    assert!(text.contains("2/2 checks passed"));
}

#[test]
fn dump_tables_is_audit_json() {
    let r = json(&cayley(&["dump-tables"]));
    let table = r["octonion_multiplication"].as_array().unwrap();
    assert_eq!(table.len(), 8);
    assert_eq!(table[0][3], "e3");
    assert_eq!(table[3][3], "-e0");
    let gram = r["jordan_gram"].as_array().unwrap();
    assert_eq!(gram.len(), 27);
    assert_eq!(gram[0][0], "1");
    assert_eq!(gram[26][26], "2");
}

#[test]
fn bad_options_exit_with_two() {
    assert_eq!(cayley(&["verify-bds", "--samples", "5"]).status.code(), Some(2));
    assert_eq!(cayley(&["verify-tables12", "--n", "1"]).status.code(), Some(2));
    assert_eq!(cayley(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn no_cache_still_passes() {
    let out = cayley(&["verify-algebras", "--no-cache", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["checks"][1]["computed"], "52");
}
