//! PBW monomials `x^α · w` and linear combinations of them.
//!
//! Both the Hecke algebra and its associated graded algebra have the basis
//! `{x^α w : α ∈ {0..l−1}^d, w ∈ S_d}`; this module holds what the two share:
//! the term key, sparse linear combinations, the canonical key index used for
//! matrix columns, text/JSON rendering, and the commutant and span-saturation
//! oracles.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::linalg::EchelonBasis;
use crate::symgroup::{all_permutations, Permutation};
use crate::{rational_to_string, Rational};

/// A PBW monomial. Ordered lexicographically on `exps`, then on the
/// one-line notation of `perm`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwKey {
    pub exps: Vec<u32>,
    pub perm: Permutation,
}

impl PbwKey {
    pub fn new(exps: Vec<u32>, perm: Permutation) -> Self {
        debug_assert_eq!(exps.len(), perm.degree());
        PbwKey { exps, perm }
    }

    pub fn identity(d: usize) -> Self {
        PbwKey { exps: vec![0; d], perm: Permutation::identity(d) }
    }

    /// Polynomial degree `|α|`.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }
}

/// A sparse `Q`-linear combination of PBW monomials with no zero
/// coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinComb {
    terms: BTreeMap<PbwKey, Rational>,
}

impl LinComb {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn monomial(key: PbwKey, coeff: Rational) -> Self {
        let mut c = LinComb::zero();
        c.add_term(key, coeff);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&PbwKey, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &PbwKey) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, key: PbwKey, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, c: &Rational) -> LinComb {
        let mut out = LinComb::zero();
        out.add_scaled(self, c);
        out
    }

    /// Largest `|α|` among the terms; `None` for zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(PbwKey::degree).max()
    }

    /// The terms of polynomial degree exactly `r`.
    pub fn degree_part(&self, r: u32) -> LinComb {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.degree() == r)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn to_vector(&self, index: &KeyIndex) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); index.len()];
        for (k, c) in &self.terms {
            v[index.position(k)] = c.clone();
        }
        v
    }

    pub fn from_vector(v: &[Rational], index: &KeyIndex) -> LinComb {
        let mut out = LinComb::zero();
        for (i, c) in v.iter().enumerate() {
            out.add_term(index.keys[i].clone(), c.clone());
        }
        out
    }

    /// Text form, highest key first, e.g. `x1*s1 + 1`. Permutations are
    /// written as reduced words in the `s_i`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (key, c)) in self.terms.iter().rev().enumerate() {
            let mut factors = Vec::new();
            for (i, &e) in key.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{}", i + 1, e)),
                }
            }
            factors.extend(key.perm.reduced_word().iter().map(|i| format!("s{i}")));
            let negative = c.is_negative();
            let abs = c.abs();
            let mut body = String::new();
            if factors.is_empty() {
                body.push_str(&rational_to_string(&abs));
            } else {
                if !abs.is_one() {
                    body.push_str(&rational_to_string(&abs));
                    body.push('*');
                }
                body.push_str(&factors.join("*"));
            }
            match (n, negative) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            out.push_str(&body);
        }
        out
    }

    /// JSON terms `[{exps, perm, num, den}]` in canonical (ascending) order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(k, c)| {
                    json!({
                        "exps": k.exps,
                        "perm": k.perm.images(),
                        "num": c.numer().to_string(),
                        "den": c.denom().to_string(),
                    })
                })
                .collect(),
        )
    }
}

/// All PBW keys for `(d, l)` in canonical order, with reverse lookup.
#[derive(Debug, Clone)]
pub struct KeyIndex {
    keys: Vec<PbwKey>,
    index: HashMap<PbwKey, usize>,
}

impl KeyIndex {
    pub fn new(d: usize, l: usize) -> Self {
        let perms = all_permutations(d);
        let mut keys = Vec::with_capacity(l.pow(d as u32) * perms.len());
        let mut exps = vec![0u32; d];
        loop {
            for w in &perms {
                keys.push(PbwKey::new(exps.clone(), w.clone()));
            }
            // Odometer over {0..l-1}^d, last coordinate fastest.
            let Some(pos) = (0..d).rev().find(|&i| exps[i] + 1 < l as u32) else {
                break;
            };
            exps[pos] += 1;
            for e in exps.iter_mut().skip(pos + 1) {
                *e = 0;
            }
        }
        let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        KeyIndex { keys, index }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &[PbwKey] {
        &self.keys
    }

    pub fn position(&self, key: &PbwKey) -> usize {
        *self
            .index
            .get(key)
            .unwrap_or_else(|| panic!("key {key:?} outside the PBW basis"))
    }
}

/// Basis of `{z : [g, z] = 0 for every generator g}` where `commutator(g, k)`
/// returns `g·k − k·g` for the basis monomial `k`.
///
/// Rows of the constraint matrix are grouped per generator and output
/// monomial; columns are computed in parallel and assembled in a fixed
/// order, so the result does not depend on scheduling.
pub fn commutant<F>(index: &KeyIndex, generators: usize, commutator: F) -> Vec<LinComb>
where
    F: Fn(usize, &PbwKey) -> LinComb + Sync,
{
    let n = index.len();
    let columns: Vec<Vec<LinComb>> = index
        .keys()
        .par_iter()
        .map(|k| (0..generators).map(|g| commutator(g, k)).collect())
        .collect();

    let mut rows: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
    for (col, per_gen) in columns.into_iter().enumerate() {
        for (g, comb) in per_gen.into_iter().enumerate() {
            for (k, c) in comb.terms {
                rows.entry((g, index.position(&k))).or_default().push((col, c));
            }
        }
    }

    let mut echelon = EchelonBasis::new(n);
    for (_, entries) in rows {
        let mut v = vec![Rational::zero(); n];
        for (col, c) in entries {
            v[col] = c;
        }
        echelon.insert(v);
    }
    echelon
        .orthogonal_kernel()
        .iter()
        .map(|v| LinComb::from_vector(v, index))
        .collect()
}

/// Span of the unital subalgebra generated by `generators`, obtained by
/// closing `{1}` under right multiplication until the span stops growing.
pub fn saturate_subalgebra<F>(
    index: &KeyIndex,
    one: &LinComb,
    generators: &[LinComb],
    multiply: F,
) -> EchelonBasis
where
    F: Fn(&LinComb, &LinComb) -> LinComb,
{
    let mut span = EchelonBasis::new(index.len());
    span.insert(one.to_vector(index));
    let mut frontier = vec![one.clone()];
    while let Some(b) = frontier.pop() {
        for g in generators {
            let p = multiply(&b, g);
            if span.insert(p.to_vector(index)) {
                frontier.push(p);
            }
        }
    }
    span
}

/// Whether every element of `elems` lies in the span of `basis`, and vice
/// versa (equal spans).
pub fn same_span(index: &KeyIndex, a: &[LinComb], b: &[LinComb]) -> bool {
    let mut ea = EchelonBasis::new(index.len());
    for x in a {
        ea.insert(x.to_vector(index));
    }
    let mut eb = EchelonBasis::new(index.len());
    for x in b {
        eb.insert(x.to_vector(index));
    }
    ea.rank() == eb.rank() && b.iter().all(|x| ea.contains(&x.to_vector(index)))
}

/// Rank of a family of combinations.
pub fn rank_of(index: &KeyIndex, elems: &[LinComb]) -> usize {
    let mut e = EchelonBasis::new(index.len());
    for x in elems {
        e.insert(x.to_vector(index));
    }
    e.rank()
}

/// Coordinates of `target` in the family `basis` (assumed independent), or
/// `None` if `target` is outside their span.
pub fn express_in(index: &KeyIndex, basis: &[LinComb], target: &LinComb) -> Option<Vec<Rational>> {
    use crate::linalg::{solve, RationalMatrix};
    let cols: Vec<Vec<Rational>> = basis.iter().map(|b| b.to_vector(index)).collect();
    let mut m = RationalMatrix::zeros(index.len(), basis.len());
    for (j, c) in cols.iter().enumerate() {
        for (i, x) in c.iter().enumerate() {
            if !x.is_zero() {
                m[(i, j)] = x.clone();
            }
        }
    }
    solve(&m, &target.to_vector(index)).ok().flatten()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_frac};

    #[test]
    fn key_index_size_and_order() {
        let idx = KeyIndex::new(2, 2);
        assert_eq!(idx.len(), 8);
        assert!(idx.keys().windows(2).all(|w| w[0] < w[1]));
        let idx = KeyIndex::new(3, 3);
        assert_eq!(idx.len(), 27 * 6);
        assert_eq!(KeyIndex::new(0, 2).len(), 1);
    }

    #[test]
    fn render_forms() {
        let d = 2;
        let mut c = LinComb::zero();
        c.add_term(PbwKey::new(vec![1, 0], Permutation::simple(1, d)), rat(1));
        c.add_term(PbwKey::identity(d), rat(1));
        assert_eq!(c.render(), "x1*s1 + 1");
        let mut c = LinComb::zero();
        c.add_term(PbwKey::new(vec![0, 2], Permutation::identity(d)), rat(-1));
        c.add_term(PbwKey::identity(d), rat_frac(-3, 2));
        assert_eq!(c.render(), "-x2^2 - 3/2");
        assert_eq!(LinComb::zero().render(), "0");
    }

    #[test]
    fn arithmetic_cancels() {
        let k = PbwKey::identity(1);
        let a = LinComb::monomial(k.clone(), rat(2));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.add(&a).coeff(&k), rat(4));
    }
}
