//! Exact-arithmetic computer algebra for degenerate cyclotomic Hecke algebras.
//!
//! The crate materializes the quotient `H_d^f` of the degenerate affine Hecke
//! algebra by `f(x_1)` in its PBW basis, together with its associated graded
//! algebra `R_l[x_1..x_d] ⋊ Q S_d`, and provides brute-force oracles for the
//! structure of their centers and blocks. All arithmetic is over `Q`.
//!
//! Module map:
//!
//! * [`combinatorics`]: partitions, multipartitions, residues and counting.
//! * [`symgroup`]: permutations, cycles, reduced words, coset representatives.
//! * [`linalg`]: dense exact linear algebra (row reduction, kernels, spans).
//! * [`pbw`]: PBW monomials and sparse linear combinations shared by both algebras.
//! * [`graded`]: the truncated twisted tensor algebra and its colored cycles.
//! * [`hecke`]: `H_d^f` with straightening to PBW normal form.
//! * [`specht`]: dual Specht modules and their central characters.
//! * [`blocks`]: central characters, block idempotents and block centers.
//! * [`expr`]: a small expression language for algebra elements.
//! * [`verify`]: the oracle suite tying everything together.

pub mod blocks;
pub mod combinatorics;
pub mod expr;
pub mod graded;
pub mod hecke;
pub mod linalg;
pub mod pbw;
pub mod specht;
pub mod symgroup;
pub mod verify;

mod error;
mod rational;

pub use error::{Error, Result};
pub use rational::{parse_rational, rational_to_string, Rational};
