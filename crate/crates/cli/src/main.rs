use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cyclohecke::blocks::block_center_dimensions;
use cyclohecke::combinatorics::{enumerate_multipartitions, enumerate_p_set, Multipartition};
use cyclohecke::expr::{evaluate, evaluate_graded, parse};
use cyclohecke::graded::class_sum;
use cyclohecke::hecke::{p_element, CyclotomicSpec, HeckeAlgebra};
use cyclohecke::specht::{central_character, dual_specht};
use cyclohecke::verify::{run_suite, Suite};
use cyclohecke::{parse_rational, Rational};

/// Exact computations in degenerate cyclotomic Hecke algebras.
#[derive(Parser)]
#[command(name = "cyclohecke", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Small,
    Full,
}

#[derive(Args)]
struct AlgebraArgs {
    /// Rank d (number of strands).
    #[arg(long)]
    d: usize,
    /// Level l; implied by --roots or --coeffs.
    #[arg(long)]
    l: Option<usize>,
    /// Roots q_1,...,q_l of f, as comma-separated rationals.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "coeffs")]
    roots: Option<String>,
    /// Coefficients c_1,...,c_l of f = x^l + c_1 x^{l-1} + ... + c_l.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// PBW normal form of an expression in H_d^f.
    Nf {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(allow_hyphen_values = true)]
        expression: String,
    },
    /// Normal form of an expression in the graded algebra.
    GradedNf {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(allow_hyphen_values = true)]
        expression: String,
    },
    /// The basis {p_d(mu)} of the center of H_d^f.
    Center {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// The class-sum basis {z_d(lambda)} of the graded center.
    GradedCenter {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Blocks of H_d^q with their idempotents and center dimensions.
    Blocks {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Generator matrices and central character of a dual Specht module.
    SpechtChar {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// Components separated by '|', e.g. "(2,1)|()".
        #[arg(long)]
        multipartition: String,
    },
    /// Run the oracle suite.
    Verify {
        #[arg(long, value_enum, default_value = "small")]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn rationals(list: &str) -> Result<Vec<Rational>> {
    list.split(',')
        .map(|t| parse_rational(t.trim()).with_context(|| format!("bad rational {t:?}")))
        .collect()
}

impl AlgebraArgs {
    fn spec(&self) -> Result<CyclotomicSpec> {
        let spec = match (&self.roots, &self.coeffs) {
            (Some(r), None) => CyclotomicSpec::from_roots(rationals(r)?, self.d)?,
            (None, Some(c)) => CyclotomicSpec::from_coeffs(rationals(c)?, self.d)?,
            _ => bail!("exactly one of --roots and --coeffs is required"),
        };
        if let Some(l) = self.l {
            if l != spec.l() {
                bail!("--l {l} does not match the {} parameters given", spec.l());
            }
        }
        Ok(spec)
    }

    fn roots(&self) -> Result<Vec<Rational>> {
        let spec = self.spec()?;
        match spec.roots() {
            Some(r) => Ok(r.to_vec()),
            None => bail!("this command requires --roots"),
        }
    }

    /// The level, for commands that only need `l`.
    fn level(&self) -> Result<usize> {
        match (self.l, &self.roots, &self.coeffs) {
            (Some(l), None, None) => Ok(l),
            (None, None, None) => bail!("one of --l, --roots or --coeffs is required"),
            _ => Ok(self.spec()?.l()),
        }
    }
}

fn emit(format: Format, text: String, value: Value) -> Result<()> {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&value)?),
    }
    Ok(())
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Nf { alg, expression } => {
            let h = HeckeAlgebra::new(alg.spec()?);
            let e = evaluate(&parse(&expression)?, &h)?;
            emit(alg.format, e.render(), e.to_json())?;
        }
        Command::GradedNf { alg, expression } => {
            let e = evaluate_graded(&parse(&expression)?, alg.d, alg.level()?)?;
            emit(alg.format, e.render(), e.to_json())?;
        }
        Command::Center { alg } => {
            let h = HeckeAlgebra::new(alg.spec()?);
            let mut lines = Vec::new();
            let mut basis = Vec::new();
            for mu in enumerate_p_set(h.d(), h.l()) {
                let p = p_element(&h, &mu)?;
                lines.push(format!("p{mu} = {}", p.render()));
                basis.push(json!({ "mu": mu.to_string(), "terms": p.terms().to_json() }));
            }
            let value = json!({ "spec": h.spec().to_json(), "dimension": basis.len(), "basis": basis });
            emit(alg.format, lines.join("\n"), value)?;
        }
        Command::GradedCenter { alg } => {
            let (d, l) = (alg.d, alg.level()?);
            let mut lines = Vec::new();
            let mut basis = Vec::new();
            for lambda in enumerate_multipartitions(d, l) {
                let z = class_sum(&lambda);
                lines.push(format!("z{lambda} = {}", z.render()));
                basis.push(json!({ "lambda": lambda.to_string(), "terms": z.terms().to_json() }));
            }
            let value = json!({ "d": d, "l": l, "dimension": basis.len(), "basis": basis });
            emit(alg.format, lines.join("\n"), value)?;
        }
        Command::Blocks { alg } => {
            if alg.roots.is_none() {
                bail!("blocks requires --roots");
            }
            let h = HeckeAlgebra::new(alg.spec()?);
            let blocks = block_center_dimensions(&h)?;
            let lines: Vec<String> = blocks
                .iter()
                .map(|b| {
                    let fiber: Vec<String> = b.fiber.iter().map(|m| m.to_string()).collect();
                    format!("{}  dim {}  [{}]", b.residues, b.center_dimension, fiber.join(", "))
                })
                .collect();
            let value = json!({
                "spec": h.spec().to_json(),
                "blocks": blocks.iter().map(|b| b.to_json()).collect::<Vec<_>>(),
            });
            emit(alg.format, lines.join("\n"), value)?;
        }
        Command::SpechtChar { alg, multipartition } => {
            let q = alg.roots()?;
            let lambda: Multipartition = multipartition.parse()?;
            if lambda.size() != alg.d {
                bail!("{lambda} has size {}, not {}", lambda.size(), alg.d);
            }
            let m = dual_specht(&lambda, &q)?;
            let cc = central_character(&m, &q)?;
            let text = format!("dimension {}\ncentral character {cc}", m.dim());
            let value = json!({
                "multipartition": lambda.to_string(),
                "module": m.to_json(),
                "central_character": cc.entries().iter().map(cyclohecke::rational_to_string).collect::<Vec<_>>(),
            });
            emit(alg.format, text, value)?;
        }
        Command::Verify { suite, format } => {
            let suite = match suite {
                SuiteArg::Small => Suite::Small,
                SuiteArg::Full => Suite::Full,
            };
            let report = run_suite(suite);
            if format == Format::Text {
                for r in &report.results {
                    let status = if r.passed { "ok  " } else { "FAIL" };
                    println!("{status} [{}] {}: {}", r.criterion, r.name, r.detail);
                }
                let failed = report.results.iter().filter(|r| !r.passed).count();
                println!("{} checks, {failed} failed", report.results.len());
                if failed > 0 {
                    eprintln!("{}", serde_json::to_string_pretty(&report.to_json())?);
                }
            } else {
                println!("{}", serde_json::to_string_pretty(&report.to_json())?);
            }
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
