//! The degenerate cyclotomic Hecke algebra `H_d^f`.
//!
//! Elements are kept in PBW normal form `Σ c x^α w` with every `α_i < l`.
//! Products are computed by straightening in the affine algebra and then
//! reducing high powers of the `x_i`. The reduction uses
//!
//! ```text
//! x_1^l     = −c_1 x_1^{l−1} − ⋯ − c_l
//! x_{i+1}^l = s_i x_i^l s_i + Σ_{t=0}^{l−1} x_i^t x_{i+1}^{l−1−t} s_i
//! ```
//!
//! and every reduction step strictly lowers the total polynomial degree,
//! which bounds the recursion.

mod center;
mod straighten;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::graded::GradedElement;
use crate::pbw::{LinComb, PbwKey};
use crate::rational::rat;
use crate::symgroup::Permutation;
use crate::{rational_to_string, Error, Rational, Result};

pub use center::{
    center_basis_bruteforce, center_commutant, p_element, power_sum_generation_check,
};
pub use straighten::{affine_multiply, perm_times_monomial};

/// Rank `d` and the monic polynomial `f(x) = x^l + c_1 x^{l−1} + ⋯ + c_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicSpec {
    d: usize,
    coeffs: Vec<Rational>,
    roots: Option<Vec<Rational>>,
}

impl CyclotomicSpec {
    /// From the coefficients `c_1..c_l`.
    pub fn from_coeffs(coeffs: Vec<Rational>, d: usize) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidInput("the level l must be at least 1".into()));
        }
        Ok(CyclotomicSpec { d, coeffs, roots: None })
    }

    /// `f(x) = (x − q_1) ⋯ (x − q_l)`.
    pub fn from_roots(roots: Vec<Rational>, d: usize) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::InvalidInput("the level l must be at least 1".into()));
        }
        // Expand, lowest degree first.
        let mut poly = vec![Rational::one()];
        for q in &roots {
            let mut next = vec![Rational::zero(); poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * q;
            }
            poly = next;
        }
        let l = roots.len();
        let coeffs = (1..=l).map(|k| poly[l - k].clone()).collect();
        Ok(CyclotomicSpec { d, coeffs, roots: Some(roots) })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn l(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn roots(&self) -> Option<&[Rational]> {
        self.roots.as_deref()
    }

    /// `f(t)`.
    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().fold(Rational::one(), |acc, c| acc * t + c)
    }

    pub fn to_json(&self) -> Value {
        let strs = |v: &[Rational]| v.iter().map(rational_to_string).collect::<Vec<_>>();
        let mut obj = json!({ "d": self.d, "l": self.l(), "coeffs": strs(&self.coeffs) });
        if let Some(r) = &self.roots {
            obj["roots"] = json!(strs(r));
        }
        obj
    }
}

/// `H_d^f` together with the cached normal forms of monomials.
#[derive(Debug)]
pub struct HeckeAlgebra {
    spec: Arc<CyclotomicSpec>,
    /// Normal form of `x_i^l`, indexed by `i − 1`.
    top_powers: Vec<LinComb>,
    monomial_cache: Mutex<HashMap<Vec<u32>, LinComb>>,
}

impl HeckeAlgebra {
    pub fn new(spec: CyclotomicSpec) -> Self {
        let (d, l) = (spec.d, spec.l());
        let mut top_powers = Vec::with_capacity(d);
        if d > 0 {
            let mut first = LinComb::zero();
            for (k, c) in spec.coeffs.iter().enumerate() {
                let mut e = vec![0; d];
                e[0] = (l - 1 - k) as u32;
                first.add_term(PbwKey::new(e, Permutation::identity(d)), -c.clone());
            }
            top_powers.push(first);
        }
        for i in 1..d {
            let si = Permutation::simple(i, d);
            let mut next = straighten::times_perm(&straighten::simple_times(i, &top_powers[i - 1]), &si);
            for t in 0..l {
                let mut e = vec![0; d];
                e[i - 1] = t as u32;
                e[i] = (l - 1 - t) as u32;
                next.add_term(PbwKey::new(e, si.clone()), Rational::one());
            }
            debug_assert!(next.iter().all(|(k, _)| k.exps.iter().all(|&x| (x as usize) < l)));
            top_powers.push(next);
        }
        HeckeAlgebra {
            spec: Arc::new(spec),
            top_powers,
            monomial_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn spec(&self) -> &CyclotomicSpec {
        &self.spec
    }

    pub fn d(&self) -> usize {
        self.spec.d
    }

    pub fn l(&self) -> usize {
        self.spec.l()
    }

    pub(crate) fn wrap(&self, comb: LinComb) -> HeckeElement {
        HeckeElement { spec: Arc::clone(&self.spec), comb }
    }

    pub fn zero(&self) -> HeckeElement {
        self.wrap(LinComb::zero())
    }

    pub fn one(&self) -> HeckeElement {
        self.wrap(LinComb::monomial(PbwKey::identity(self.d()), Rational::one()))
    }

    pub fn scalar(&self, c: Rational) -> HeckeElement {
        self.wrap(LinComb::monomial(PbwKey::identity(self.d()), c))
    }

    pub fn x(&self, i: usize) -> Result<HeckeElement> {
        self.check_x(i)?;
        let mut e = vec![0; self.d()];
        e[i - 1] = 1;
        Ok(self.monomial(&e))
    }

    pub fn s(&self, i: usize) -> Result<HeckeElement> {
        if i == 0 || i >= self.d() {
            return Err(Error::IndexOutOfRange(format!("s{i} with d={}", self.d())));
        }
        Ok(self.perm(Permutation::simple(i, self.d())))
    }

    fn check_x(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.d() {
            return Err(Error::IndexOutOfRange(format!("x{i} with d={}", self.d())));
        }
        Ok(())
    }

    pub fn perm(&self, w: Permutation) -> HeckeElement {
        assert_eq!(w.degree(), self.d());
        self.wrap(LinComb::monomial(PbwKey::new(vec![0; self.d()], w), Rational::one()))
    }

    pub fn from_key(&self, key: PbwKey, c: Rational) -> HeckeElement {
        assert!(key.exps.iter().all(|&e| (e as usize) < self.l()));
        self.wrap(LinComb::monomial(key, c))
    }

    /// Normal form of `x_1^{a_1} ⋯ x_d^{a_d}` for arbitrary exponents.
    pub fn monomial(&self, exps: &[u32]) -> HeckeElement {
        self.wrap(self.monomial_nf(exps))
    }

    /// Normal form of `x_i^k`.
    pub fn reduce_high_power(&self, i: usize, k: u32) -> Result<HeckeElement> {
        self.check_x(i)?;
        let mut e = vec![0; self.d()];
        e[i - 1] = k;
        Ok(self.monomial(&e))
    }

    fn monomial_nf(&self, exps: &[u32]) -> LinComb {
        let l = self.l() as u32;
        let Some(i) = exps.iter().position(|&e| e >= l) else {
            return LinComb::monomial(
                PbwKey::new(exps.to_vec(), Permutation::identity(exps.len())),
                Rational::one(),
            );
        };
        if let Some(hit) = self.monomial_cache.lock().unwrap().get(exps) {
            return hit.clone();
        }
        // x^δ = x^{δ − l e_i} · x_i^l and the polynomial factors commute.
        let mut rest = exps.to_vec();
        rest[i] -= l;
        let mut out = LinComb::zero();
        for (k, c) in self.top_powers[i].iter() {
            let combined: Vec<u32> = rest.iter().zip(&k.exps).map(|(a, b)| a + b).collect();
            let nf = self.monomial_nf(&combined);
            out.add_scaled(&straighten::times_perm(&nf, &k.perm), c);
        }
        self.monomial_cache.lock().unwrap().insert(exps.to_vec(), out.clone());
        out
    }

    /// Reduces an affine combination (unbounded exponents) to normal form.
    fn reduce(&self, comb: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (k, c) in comb.iter() {
            if k.exps.iter().all(|&e| (e as usize) < self.l()) {
                out.add_term(k.clone(), c.clone());
            } else {
                out.add_scaled(&straighten::times_perm(&self.monomial_nf(&k.exps), &k.perm), c);
            }
        }
        out
    }

    fn check(&self, e: &HeckeElement) -> Result<()> {
        if *e.spec != *self.spec {
            return Err(Error::ParameterMismatch("element belongs to a different algebra".into()));
        }
        Ok(())
    }

    pub fn multiply(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.reduce(&affine_multiply(&a.comb, &b.comb))))
    }

    pub fn commutator(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        Ok(&self.multiply(a, b)? - &self.multiply(b, a)?)
    }

    pub fn pow(&self, a: &HeckeElement, n: u32) -> Result<HeckeElement> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.multiply(&acc, a)?;
        }
        Ok(acc)
    }

    /// Generators `x_1, s_1, …, s_{d−1}`.
    pub fn generators(&self) -> Vec<HeckeElement> {
        let mut gens = Vec::new();
        if self.d() > 0 {
            gens.push(self.x(1).unwrap());
        }
        gens.extend((1..self.d()).map(|i| self.s(i).unwrap()));
        gens
    }

    pub fn is_central(&self, z: &HeckeElement) -> Result<bool> {
        for g in self.generators() {
            if !self.commutator(&g, z)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElement {
    spec: Arc<CyclotomicSpec>,
    comb: LinComb,
}

impl HeckeElement {
    pub fn spec(&self) -> &CyclotomicSpec {
        &self.spec
    }

    pub fn terms(&self) -> &LinComb {
        &self.comb
    }

    pub fn is_zero(&self) -> bool {
        self.comb.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> HeckeElement {
        HeckeElement { spec: Arc::clone(&self.spec), comb: self.comb.scale(c) }
    }

    /// Largest `|α|` among the terms; `None` for zero.
    pub fn filtration_degree(&self) -> Option<u32> {
        self.comb.max_degree()
    }

    /// The terms of degree exactly `r`, read in the graded algebra.
    pub fn degree_part(&self, r: u32) -> GradedElement {
        GradedElement::from_comb(self.spec.d, self.spec.l(), self.comb.degree_part(r))
    }

    /// `gr_r` of the element, where `r` must be its filtration degree.
    pub fn gr_component(&self, r: u32) -> Result<GradedElement> {
        let top = self.filtration_degree();
        if top != Some(r) {
            return Err(Error::InvalidInput(format!(
                "gr_{r} requested but the filtration degree is {top:?}"
            )));
        }
        Ok(self.degree_part(r))
    }

    pub fn render(&self) -> String {
        self.comb.render()
    }

    pub fn to_json(&self) -> Value {
        json!({ "spec": self.spec.to_json(), "terms": self.comb.to_json() })
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        assert!(self.spec == rhs.spec, "adding elements of different algebras");
        HeckeElement { spec: Arc::clone(&self.spec), comb: self.comb.add(&rhs.comb) }
    }
}

impl Sub for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        assert!(self.spec == rhs.spec, "subtracting elements of different algebras");
        HeckeElement { spec: Arc::clone(&self.spec), comb: self.comb.sub(&rhs.comb) }
    }
}

impl Neg for &HeckeElement {
    type Output = HeckeElement;
    fn neg(self) -> HeckeElement {
        self.scale(&rat(-1))
    }
}
