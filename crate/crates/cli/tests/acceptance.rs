//! One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{golden, random_expression, stdout};
use cyclohecke::expr::{evaluate, parse};
use cyclohecke::hecke::center_basis_bruteforce;
use cyclohecke::verify::{algebra, check_murphy, run_suite, Suite};
use cyclohecke::Rational;

fn zeros(l: usize) -> Vec<Rational> {
    vec![Rational::from_integer(0.into()); l]
}

/// Counts that do not come from the library: |M_d(l)| by hand and p(5).
fn independent(criterion: u8) -> Result<(), String> {
    match criterion {
        1 => {
            let known = [
                (1, 1, 1), (2, 1, 2), (3, 1, 3), (4, 1, 5),
                (1, 2, 2), (2, 2, 5), (3, 2, 10), (4, 2, 20),
                (1, 3, 3), (2, 3, 9), (3, 3, 22),
            ];
            for (d, l, m) in known {
                let dim = center_basis_bruteforce(&algebra(&zeros(l), d)).map_err(|e| e.to_string())?.len();
                if dim != m {
                    return Err(format!("dim Z at d={d} l={l} is {dim}, expected {m}"));
                }
            }
            Ok(())
        }
        5 => check_murphy(5).map_err(|e| e.to_string()).and_then(|s| {
            (s == "dim Z = 7").then_some(()).ok_or(s)
        }),
        _ => Ok(()),
    }
}

fn cli() -> Result<(), String> {
    let check = |got: String, want: String, what: &str| {
        if got == want { Ok(()) } else { Err(format!("{what}: got {got:?}")) }
    };
    check(stdout(&["nf", "--d", "2", "--roots", "0,0", "s1*x2"]), "x1*s1 + 1\n".into(), "nf")?;
    check(
        stdout(&["center", "--d", "2", "--l", "2", "--roots", "0,0", "--format", "json"]),
        golden("center.json"),
        "center",
    )?;
    check(stdout(&["blocks", "--d", "2", "--roots", "0,0"]), golden("blocks.txt"), "blocks")?;

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let roots = [Rational::from_integer(0.into()), Rational::from_integer(2.into())];
    let h = algebra(&roots, 3);
    for n in 0..200 {
        let src = random_expression(&mut rng, 3, 3);
        let first = evaluate(&parse(&src).map_err(|e| e.to_string())?, &h).map_err(|e| e.to_string())?;
        let printed = first.render();
        let second = evaluate(&parse(&printed).map_err(|e| e.to_string())?, &h).map_err(|e| e.to_string())?;
        if second != first || second.render() != printed {
            return Err(format!("round trip {n} fails on {src:?}"));
        }
        if n % 20 == 0 {
            let via_cli = stdout(&["nf", "--d", "3", "--roots", "0,2", &src]);
            if via_cli.trim_end() != printed {
                return Err(format!("binary disagrees on {src:?}"));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let report = run_suite(Suite::Full);
    let mut all = true;
    for criterion in 1..=10u8 {
        let results: Vec<_> = report.results.iter().filter(|r| r.criterion == criterion).collect();
        let mut failures: Vec<String> =
            results.iter().filter(|r| !r.passed).map(|r| format!("{}: {}", r.name, r.detail)).collect();
        if let Err(e) = independent(criterion) {
            failures.push(e);
        }
        let ok = failures.is_empty() && !results.is_empty();
        all &= ok;
        println!("{} criterion {criterion} ({} checks)", if ok { "PASS" } else { "FAIL" }, results.len());
        for f in failures {
            println!("    {f}");
        }
    }
    match cli() {
        Ok(()) => println!("PASS criterion 11 (3 examples, 200 round trips)"),
        Err(e) => {
            all = false;
            println!("FAIL criterion 11\n    {e}");
        }
    }
    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    if all { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
