//! The truncated twisted tensor algebra `R_l[x_1..x_d] ⋊ Q S_d`.
//!
//! Here `R_l[x_1..x_d]` is the polynomial ring modulo `x_i^l`, permutations
//! act on it by `w·x_i = x_{w(i)}`, and `(f⊗v)(g⊗w) = f·(v·g) ⊗ vw`. This is
//! the associated graded algebra of `H_d^f` for the filtration by polynomial
//! degree.

mod cycles;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde_json::{json, Value};

use crate::pbw::{commutant, KeyIndex, LinComb, PbwKey};
use crate::rational::rat;
use crate::symgroup::Permutation;
use crate::{Error, Rational, Result};

pub use cycles::{
    class_sum, colored_cycle_product, cycle_type, decompose_disjoint, enumerate_disjoint_products,
    expand_in_class_sums, murphy_element, product_element, y_element, ColoredCycle, CycleProduct,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedElement {
    d: usize,
    l: usize,
    comb: LinComb,
}

impl GradedElement {
    pub fn zero(d: usize, l: usize) -> Self {
        assert!(l >= 1, "level must be at least 1");
        GradedElement { d, l, comb: LinComb::zero() }
    }

    pub fn one(d: usize, l: usize) -> Self {
        Self::from_key(d, l, PbwKey::identity(d), rat(1))
    }

    pub fn from_key(d: usize, l: usize, key: PbwKey, coeff: Rational) -> Self {
        assert!(key.exps.iter().all(|&e| (e as usize) < l), "exponent >= l");
        GradedElement { d, l, comb: LinComb::monomial(key, coeff) }
    }

    pub(crate) fn from_comb(d: usize, l: usize, comb: LinComb) -> Self {
        GradedElement { d, l, comb }
    }

    /// The monomial `x^α` (zero if some exponent reaches `l`).
    pub fn monomial(d: usize, l: usize, exps: &[u32]) -> Self {
        if exps.iter().any(|&e| e as usize >= l) {
            return Self::zero(d, l);
        }
        Self::from_key(d, l, PbwKey::new(exps.to_vec(), Permutation::identity(d)), rat(1))
    }

    pub fn x(d: usize, l: usize, i: usize) -> Self {
        let mut e = vec![0; d];
        e[i - 1] = 1;
        Self::monomial(d, l, &e)
    }

    /// The transposition `(i i+1)`.
    pub fn s(d: usize, l: usize, i: usize) -> Self {
        Self::perm(l, Permutation::simple(i, d))
    }

    pub fn perm(l: usize, w: Permutation) -> Self {
        let d = w.degree();
        Self::from_key(d, l, PbwKey::new(vec![0; d], w), rat(1))
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn terms(&self) -> &LinComb {
        &self.comb
    }

    pub fn is_zero(&self) -> bool {
        self.comb.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GradedElement { d: self.d, l: self.l, comb: self.comb.scale(c) }
    }

    fn check(&self, other: &GradedElement) -> Result<()> {
        if (self.d, self.l) != (other.d, other.l) {
            return Err(Error::ParameterMismatch(format!(
                "graded algebras (d={}, l={}) and (d={}, l={})",
                self.d, self.l, other.d, other.l
            )));
        }
        Ok(())
    }

    pub fn multiply(&self, other: &GradedElement) -> Result<GradedElement> {
        self.check(other)?;
        let mut out = LinComb::zero();
        for (a, ca) in self.comb.iter() {
            for (b, cb) in other.comb.iter() {
                if let Some(k) = multiply_keys(a, b, self.l) {
                    out.add_term(k, ca * cb);
                }
            }
        }
        Ok(GradedElement { d: self.d, l: self.l, comb: out })
    }

    pub fn commutator(&self, other: &GradedElement) -> Result<GradedElement> {
        Ok(&self.multiply(other)? - &other.multiply(self)?)
    }

    /// Commutes with `x_1` and every `s_i`, which generate the algebra.
    pub fn is_central(&self) -> bool {
        let (d, l) = (self.d, self.l);
        let mut gens = vec![];
        if d > 0 {
            gens.push(Self::x(d, l, 1));
        }
        gens.extend((1..d).map(|i| Self::s(d, l, i)));
        gens.iter().all(|g| self.commutator(g).map(|c| c.is_zero()).unwrap_or(false))
    }

    pub fn render(&self) -> String {
        self.comb.render()
    }

    pub fn to_json(&self) -> Value {
        json!({ "d": self.d, "l": self.l, "terms": self.comb.to_json() })
    }
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &GradedElement {
    type Output = GradedElement;
    fn add(self, rhs: &GradedElement) -> GradedElement {
        self.check(rhs).expect("adding elements of different algebras");
        GradedElement { d: self.d, l: self.l, comb: self.comb.add(&rhs.comb) }
    }
}

impl Sub for &GradedElement {
    type Output = GradedElement;
    fn sub(self, rhs: &GradedElement) -> GradedElement {
        self.check(rhs).expect("subtracting elements of different algebras");
        GradedElement { d: self.d, l: self.l, comb: self.comb.sub(&rhs.comb) }
    }
}

impl Neg for &GradedElement {
    type Output = GradedElement;
    fn neg(self) -> GradedElement {
        self.scale(&rat(-1))
    }
}

/// `(x^α v)(x^β w) = x^{α + v·β} vw`, or `None` once an exponent reaches `l`.
pub(crate) fn multiply_keys(a: &PbwKey, b: &PbwKey, l: usize) -> Option<PbwKey> {
    let mut exps = a.exps.clone();
    for (j, &e) in b.exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let slot = &mut exps[a.perm.apply(j + 1) - 1];
        *slot += e;
        if *slot as usize >= l {
            return None;
        }
    }
    Some(PbwKey::new(exps, a.perm.compose_unchecked(&b.perm)))
}

/// `h_r(I)`: the sum of `Π_{i∈I} x_i^{r_i}` over `0 ≤ r_i < l` with
/// `Σ r_i = (|I|−1)(l−1) + r`.
pub fn h_poly(d: usize, l: usize, r: usize, indices: &[usize]) -> GradedElement {
    assert!(!indices.is_empty(), "h_r needs a non-empty index set");
    let mut out = GradedElement::zero(d, l);
    let target = (indices.len() - 1) * (l - 1) + r;
    if r >= l {
        return out;
    }
    let mut exps = vec![0u32; d];
    fn rec(
        pos: usize,
        remaining: usize,
        indices: &[usize],
        l: usize,
        exps: &mut Vec<u32>,
        out: &mut LinComb,
    ) {
        if pos == indices.len() {
            if remaining == 0 {
                out.add_term(
                    PbwKey::new(exps.clone(), Permutation::identity(exps.len())),
                    rat(1),
                );
            }
            return;
        }
        for e in 0..l.min(remaining + 1) {
            exps[indices[pos] - 1] = e as u32;
            rec(pos + 1, remaining - e, indices, l, exps, out);
        }
        exps[indices[pos] - 1] = 0;
    }
    rec(0, target, indices, l, &mut exps, &mut out.comb);
    out
}

fn graded_commutant(d: usize, l: usize, generators: Vec<GradedElement>) -> Vec<GradedElement> {
    let index = KeyIndex::new(d, l);
    commutant(&index, generators.len(), |g, key| {
        let z = GradedElement::from_key(d, l, key.clone(), rat(1));
        generators[g].commutator(&z).expect("same algebra").comb
    })
    .into_iter()
    .map(|c| GradedElement::from_comb(d, l, c))
    .collect()
}

/// Brute-force basis of `Q_d`, the centralizer of `R_l[x_1..x_d]`.
pub fn centralizer_basis(d: usize, l: usize) -> Vec<GradedElement> {
    graded_commutant(d, l, (1..=d).map(|i| GradedElement::x(d, l, i)).collect())
}

/// Brute-force basis of the center, as the commutant of `x_1, s_1..s_{d−1}`.
pub fn center_basis_bruteforce(d: usize, l: usize) -> Vec<GradedElement> {
    let mut gens = Vec::new();
    if d > 0 {
        gens.push(GradedElement::x(d, l, 1));
    }
    gens.extend((1..d).map(|i| GradedElement::s(d, l, i)));
    graded_commutant(d, l, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{basd_rank, enumerate_multipartitions, enumerate_partitions};

    #[test]
    fn twist_rule() {
        let (d, l) = (2, 3);
        let lhs = GradedElement::x(d, l, 1)
            .multiply(&GradedElement::s(d, l, 1))
            .unwrap()
            .multiply(&GradedElement::x(d, l, 1))
            .unwrap();
        let expected = GradedElement::monomial(d, l, &[1, 1])
            .multiply(&GradedElement::s(d, l, 1))
            .unwrap();
        assert_eq!(lhs, expected);
        assert_eq!(lhs.render(), "x1*x2*s1");
    }

    #[test]
    fn truncation() {
        for l in 1..=4 {
            let top = GradedElement::monomial(1, l, &[(l - 1) as u32]);
            assert!(top.multiply(&GradedElement::x(1, l, 1)).unwrap().is_zero());
        }
    }

    #[test]
    fn parameter_mismatch() {
        let a = GradedElement::one(2, 2);
        let b = GradedElement::one(2, 3);
        assert!(matches!(a.multiply(&b), Err(Error::ParameterMismatch(_))));
    }

    #[test]
    fn h_examples() {
        let (d, l) = (3, 2);
        assert!(h_poly(d, l, 2, &[1, 2]).is_zero());
        assert_eq!(h_poly(d, l, 1, &[1, 3]), GradedElement::monomial(d, l, &[1, 0, 1]));
        let h0 = h_poly(2, 2, 0, &[1, 2]);
        assert_eq!(h0, &GradedElement::x(2, 2, 1) + &GradedElement::x(2, 2, 2));
        let l = 3;
        assert_eq!(h_poly(3, l, l - 1, &[1, 2, 3]), GradedElement::monomial(3, l, &[2, 2, 2]));
    }

    #[test]
    fn centralizer_dimensions() {
        for l in 1..=3 {
            assert_eq!(centralizer_basis(1, l).len(), l);
        }
        assert_eq!(centralizer_basis(2, 2).len(), 6);
        assert_eq!(centralizer_basis(2, 3).len(), basd_rank(2, 3).unwrap() as usize);
    }

    #[test]
    fn center_dimensions() {
        for l in 1..=3 {
            let c = center_basis_bruteforce(1, l);
            assert_eq!(c.len(), l);
        }
        assert_eq!(center_basis_bruteforce(2, 2).len(), 5);
        for d in 1..=4 {
            assert_eq!(center_basis_bruteforce(d, 1).len(), enumerate_partitions(d).len());
        }
        assert_eq!(center_basis_bruteforce(2, 3).len(), enumerate_multipartitions(2, 3).len());
    }
}
