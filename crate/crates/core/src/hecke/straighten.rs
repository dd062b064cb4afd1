//! Straightening in the degenerate affine Hecke algebra `H_d`.
//!
//! Only the three rewrite rules are used:
//!
//! ```text
//! s_i x_{i+1} → x_i s_i + 1
//! s_i x_i     → x_{i+1} s_i − 1
//! s_i x_j     → x_j s_i          (j ≠ i, i+1)
//! ```
//!
//! No truncation happens here: exponents are unbounded and the result is the
//! PBW normal form `Σ c x^γ u` in `H_d` itself.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::pbw::{LinComb, PbwKey};
use crate::symgroup::Permutation;
use crate::Rational;

/// `s_i · x_i^a x_{i+1}^b` as a list of `(coeff, a', b', keeps_s)`, meaning
/// `coeff · x_i^{a'} x_{i+1}^{b'} · (s_i if keeps_s else 1)`.
fn simple_past_pair(a: u32, b: u32) -> Vec<(i64, u32, u32, bool)> {
    if a > 0 {
        // s_i x_i · rest = x_{i+1} (s_i · rest) − rest
        let mut out: Vec<_> = simple_past_pair(a - 1, b)
            .into_iter()
            .map(|(c, p, q, s)| (c, p, q + 1, s))
            .collect();
        out.push((-1, a - 1, b, false));
        collect_pairs(out)
    } else if b > 0 {
        // s_i x_{i+1} · rest = x_i (s_i · rest) + rest
        let mut out: Vec<_> = simple_past_pair(0, b - 1)
            .into_iter()
            .map(|(c, p, q, s)| (c, p + 1, q, s))
            .collect();
        out.push((1, 0, b - 1, false));
        collect_pairs(out)
    } else {
        vec![(1, 0, 0, true)]
    }
}

fn collect_pairs(terms: Vec<(i64, u32, u32, bool)>) -> Vec<(i64, u32, u32, bool)> {
    let mut acc: HashMap<(u32, u32, bool), i64> = HashMap::new();
    for (c, p, q, s) in terms {
        *acc.entry((p, q, s)).or_insert(0) += c;
    }
    let mut out: Vec<_> = acc
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|((p, q, s), c)| (c, p, q, s))
        .collect();
    out.sort_unstable_by_key(|&(_, p, q, s)| (p, q, s));
    out
}

/// `s_i · (x^γ u)` in `H_d`, accumulated into `out` with factor `coeff`.
pub(crate) fn simple_times_term(
    i: usize,
    exps: &[u32],
    perm: &Permutation,
    coeff: &Rational,
    out: &mut LinComb,
) {
    let (a, b) = (exps[i - 1], exps[i]);
    for (c, p, q, keeps) in simple_past_pair(a, b) {
        let mut e = exps.to_vec();
        e[i - 1] = p;
        e[i] = q;
        let w = if keeps { perm.simple_times(i) } else { perm.clone() };
        out.add_term(PbwKey::new(e, w), coeff * Rational::from_integer(BigInt::from(c)));
    }
}

/// `w · x^β` in normal form in `H_d`, applying the letters of a reduced
/// word of `w` from the right.
pub fn perm_times_monomial(w: &Permutation, exps: &[u32]) -> LinComb {
    let d = w.degree();
    let mut cur = LinComb::monomial(
        PbwKey::new(exps.to_vec(), Permutation::identity(d)),
        Rational::from_integer(1.into()),
    );
    for &i in w.reduced_word().iter().rev() {
        let mut next = LinComb::zero();
        for (k, c) in cur.iter() {
            simple_times_term(i, &k.exps, &k.perm, c, &mut next);
        }
        cur = next;
    }
    cur
}

/// Left multiplication of a whole combination by `s_i` in `H_d`.
pub(crate) fn simple_times(i: usize, comb: &LinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (k, c) in comb.iter() {
        simple_times_term(i, &k.exps, &k.perm, c, &mut out);
    }
    out
}

/// Right multiplication by a permutation: `x^γ u ↦ x^γ (u∘w)`.
pub(crate) fn times_perm(comb: &LinComb, w: &Permutation) -> LinComb {
    let mut out = LinComb::zero();
    for (k, c) in comb.iter() {
        out.add_term(PbwKey::new(k.exps.clone(), k.perm.compose_unchecked(w)), c.clone());
    }
    out
}

/// The product of two normal-form elements of `H_d` (no truncation).
pub fn affine_multiply(a: &LinComb, b: &LinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (ka, ca) in a.iter() {
        for (kb, cb) in b.iter() {
            let moved = perm_times_monomial(&ka.perm, &kb.exps);
            let c = ca * cb;
            for (km, cm) in moved.iter() {
                let exps: Vec<u32> = ka.exps.iter().zip(&km.exps).map(|(x, y)| x + y).collect();
                if cm.is_zero() {
                    continue;
                }
                out.add_term(PbwKey::new(exps, km.perm.compose_unchecked(&kb.perm)), &c * cm);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn mono(exps: &[u32], w: Permutation) -> LinComb {
        LinComb::monomial(PbwKey::new(exps.to_vec(), w), rat(1))
    }

    #[test]
    fn defining_relations() {
        let d = 3;
        let s1 = Permutation::simple(1, d);
        // s1 x2 = x1 s1 + 1
        let got = perm_times_monomial(&s1, &[0, 1, 0]);
        let want = mono(&[1, 0, 0], s1.clone()).add(&mono(&[0, 0, 0], Permutation::identity(d)));
        assert_eq!(got, want);
        // s1 x1 = x2 s1 - 1
        let got = perm_times_monomial(&s1, &[1, 0, 0]);
        let want = mono(&[0, 1, 0], s1.clone()).sub(&mono(&[0, 0, 0], Permutation::identity(d)));
        assert_eq!(got, want);
        // s1 x3 = x3 s1
        assert_eq!(perm_times_monomial(&s1, &[0, 0, 1]), mono(&[0, 0, 1], s1));
    }

    #[test]
    fn divided_difference_closed_form() {
        // s_i f = (s_i f) s_i + (f − s_i f)/(x_{i+1} − x_i); for f = x_i^a x_{i+1}^b
        // with a < b the correction is x_i^a x_{i+1}^a Σ_t x_i^t x_{i+1}^{b−a−1−t}.
        for a in 0..5u32 {
            for b in 0..5u32 {
                let got = collect_pairs(simple_past_pair(a, b));
                let mut want = vec![(1i64, b, a, true)];
                if a < b {
                    for t in 0..(b - a) {
                        want.push((1, a + t, b - 1 - t, false));
                    }
                } else {
                    for t in 0..(a - b) {
                        want.push((-1, b + t, a - 1 - t, false));
                    }
                }
                assert_eq!(got, collect_pairs(want), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn affine_associativity_on_generators() {
        let d = 3;
        let x = |i: usize| {
            let mut e = vec![0; d];
            e[i - 1] = 1;
            mono(&e, Permutation::identity(d))
        };
        let s = |i: usize| mono(&[0; 3], Permutation::simple(i, d));
        let elems = [x(1), x(2), x(3), s(1), s(2), affine_multiply(&x(2), &s(1))];
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    let l = affine_multiply(&affine_multiply(a, b), c);
                    let r = affine_multiply(a, &affine_multiply(b, c));
                    assert_eq!(l, r);
                }
            }
        }
    }
}
