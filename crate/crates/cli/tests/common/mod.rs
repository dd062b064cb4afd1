#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn cyclohecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclohecke")).args(args).output().expect("binary runs")
}

pub fn stdout(args: &[&str]) -> String {
    let out = cyclohecke(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8")
}

pub fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).expect("golden file")
}

/// A random expression over `x1..xd`, `s1..s(d-1)` in the surface syntax,
/// exercising every production of the grammar.
pub fn random_expression(rng: &mut ChaCha8Rng, d: usize, depth: u32) -> String {
    let leaf = |rng: &mut ChaCha8Rng| match rng.gen_range(0..3) {
        0 => format!("x{}", rng.gen_range(1..=d)),
        1 if d > 1 => format!("s{}", rng.gen_range(1..d)),
        _ => {
            let n = rng.gen_range(0..6);
            if rng.gen_bool(0.3) {
                format!("{n}/{}", rng.gen_range(1..4))
            } else {
                n.to_string()
            }
        }
    };
    if depth == 0 {
        return leaf(rng);
    }
    let sub = |rng: &mut ChaCha8Rng| random_expression(rng, d, depth - 1);
    match rng.gen_range(0..6) {
        0 => format!("{} + {}", sub(rng), sub(rng)),
        1 => format!("{} - ({})", sub(rng), sub(rng)),
        2 => format!("({})*({})", sub(rng), sub(rng)),
        3 => format!("({}) ({})", sub(rng), sub(rng)),
        4 => format!("({})^{}", sub(rng), rng.gen_range(0..3)),
        _ => leaf(rng),
    }
}
