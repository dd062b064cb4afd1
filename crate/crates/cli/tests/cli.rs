mod common;

use common::{cyclohecke, golden, random_expression, stdout};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["nf", "--d", "2", "--roots", "0,0", "s1*x2"]), golden("nf.txt"));
    assert_eq!(stdout(&["nf", "--d", "2", "--roots", "0,0", "s1*x2"]), "x1*s1 + 1\n");
    let center = stdout(&["center", "--d", "2", "--l", "2", "--roots", "0,0", "--format", "json"]);
    assert_eq!(center, golden("center.json"));
    let v: Value = serde_json::from_str(&center).unwrap();
    assert_eq!(v["basis"].as_array().unwrap().len(), 5);
    let blocks = stdout(&["blocks", "--d", "2", "--roots", "0,0"]);
    assert_eq!(blocks, golden("blocks.txt"));
    let dims: Vec<_> = blocks.lines().map(|l| l.split("dim ").nth(1).unwrap().split(' ').next().unwrap()).collect();
    assert_eq!(dims, ["2", "2", "1"]);
}

#[test]
fn small_relations() {
    assert_eq!(stdout(&["nf", "--d", "2", "--roots", "0,0", "x1^2"]), "0\n");
    assert_eq!(stdout(&["nf", "--d", "2", "--roots", "0,0", "s1*s1"]), "1\n");
    assert_eq!(stdout(&["nf", "--d", "2", "--coeffs", "-1,0", "x1^3"]), "x1\n");
    assert_eq!(stdout(&["graded-nf", "--d", "2", "--l", "3", "x1 s1 x1"]), "x1*x2*s1\n");
    assert_eq!(stdout(&["nf", "--d", "2", "--roots", "-1/2", "2x1"]), "-1\n");
}

#[test]
fn json_is_canonical() {
    let a = stdout(&["blocks", "--d", "2", "--roots", "0,1", "--format", "json"]);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", a);
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["blocks", "spec"]);
}

#[test]
fn usage_errors() {
    for args in [
        &["nf", "--d", "2", "x1"][..],
        &["nf", "--d", "2", "--roots", "0", "--coeffs", "0", "x1"],
        &["nf", "--d", "2", "--roots", "0,0", "x0"],
        &["nf", "--d", "2", "--roots", "0,0", "x1 +"],
        &["blocks", "--d", "2", "--coeffs", "0,0"],
        &["nf", "--d", "2", "--l", "3", "--roots", "0,0", "x1"],
    ] {
        assert!(!cyclohecke(args).status.success(), "{args:?}");
    }
    let err = cyclohecke(&["nf", "--d", "2", "--roots", "0,0", "x0"]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("generator index out of range"));
    let err = cyclohecke(&["nf", "--d", "2", "--roots", "0,0", "x1 + )"]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("byte 5"));
}

#[test]
fn specht_character() {
    let out = stdout(&["specht-char", "--d", "3", "--roots", "0,1", "--multipartition", "(2)|(1)"]);
    assert_eq!(out, "dimension 3\ncentral character {0, 1, 1}\n");
    let v: Value = serde_json::from_str(&stdout(&[
        "specht-char", "--d", "2", "--roots", "0", "--multipartition", "(1,1)", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(v["module"]["dim"], 1);
}

#[test]
fn small_suite_passes() {
    let out = cyclohecke(&["verify", "--suite", "small", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn printed_normal_forms_reparse_to_themselves() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let e = random_expression(&mut rng, 3, 3);
        let first = stdout(&["nf", "--d", "3", "--roots", "0,2", &e]);
        let again = stdout(&["nf", "--d", "3", "--roots", "0,2", first.trim_end()]);
        assert_eq!(first, again, "{e}");
    }
}
