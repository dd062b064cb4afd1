//! Partitions, multipartitions and the counting identities built on them.
//!
//! Enumeration orders are fixed so that downstream matrix indexing is
//! deterministic:
//!
//! * partitions of `d` are listed in reverse-lexicographic order, so
//!   `(3), (2,1), (1,1,1)`;
//! * `M_d(l)` lists multipartitions by decreasing size of the first
//!   component, recursively, with each component in reverse-lexicographic
//!   order;
//! * `P_d(l)` lists partitions by increasing size, reverse-lexicographic
//!   within each size.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::rational::rat;
use crate::{Error, Rational, Result};

/// A partition stored as its weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ/l`: every part floored by `l`, zeros dropped.
    pub fn floor_div(&self, l: usize) -> Partition {
        Partition::new(self.parts.iter().map(|p| p / l).collect())
    }

    /// The parts padded with zeros to a `d`-tuple. Panics if `ℓ(λ) > d`.
    pub fn padded(&self, d: usize) -> Vec<usize> {
        assert!(self.length() <= d, "partition longer than {d}");
        let mut v = self.parts.clone();
        v.resize(d, 0);
        v
    }

    /// Boxes `(row, col)` of the Young diagram, 1-based, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// The conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        Partition::new(
            (1..=first)
                .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// `ℓ(λ) + |λ/l| ≤ d`.
    pub fn in_p_set(&self, d: usize, l: usize) -> bool {
        self.length() + self.floor_div(l).size() <= d
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Accepts `(3,1)`, `3,1`, `()` and `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('(').unwrap_or(t);
        let t = t.strip_suffix(')').unwrap_or(t).trim();
        if t.is_empty() || t == "∅" || t == "-" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition::new(parts))
    }
}

/// An `l`-tuple of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "a multipartition has level >= 1");
        Multipartition { components }
    }

    pub fn empty(l: usize) -> Self {
        Multipartition::new(vec![Partition::empty(); l])
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// `#λ = d − (number of parts of λ^{(1)} equal to 1)`.
    pub fn sharp(&self) -> usize {
        let ones = self.components[0].parts().iter().filter(|&&p| p == 1).count();
        self.size() - ones
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Multipartition {
    type Err = Error;

    /// Components separated by `|`, e.g. `(2,1)|()|(1)`.
    fn from_str(s: &str) -> Result<Self> {
        let comps = s
            .split('|')
            .map(str::parse::<Partition>)
            .collect::<Result<Vec<_>>>()?;
        Ok(Multipartition::new(comps))
    }
}

/// A multiset of rationals, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueMultiset {
    entries: Vec<Rational>,
}

impl ResidueMultiset {
    pub fn new(mut entries: Vec<Rational>) -> Self {
        entries.sort();
        ResidueMultiset { entries }
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Multiset union, i.e. the class of the concatenated tuple.
    pub fn union(&self, other: &ResidueMultiset) -> ResidueMultiset {
        let mut v = self.entries.clone();
        v.extend(other.entries.iter().cloned());
        ResidueMultiset::new(v)
    }
}

impl fmt::Display for ResidueMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", crate::rational_to_string(e))?;
        }
        write!(f, "}}")
    }
}

/// Partitions of `n` with every part at most `max`, reverse-lexicographic.
fn partitions_bounded(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition { parts: prefix.clone() });
        return;
    }
    for p in (1..=max.min(n)).rev() {
        prefix.push(p);
        partitions_bounded(n - p, p, prefix, out);
        prefix.pop();
    }
}

/// All partitions of `d` in reverse-lexicographic order.
pub fn enumerate_partitions(d: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    partitions_bounded(d, d, &mut Vec::new(), &mut out);
    out
}

/// The set `M_d(l)` of `l`-multipartitions of `d`.
pub fn enumerate_multipartitions(d: usize, l: usize) -> Vec<Multipartition> {
    assert!(l >= 1, "level must be at least 1");
    fn rec(d: usize, l: usize, prefix: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
        if l == 1 {
            for p in enumerate_partitions(d) {
                prefix.push(p);
                out.push(Multipartition::new(prefix.clone()));
                prefix.pop();
            }
            return;
        }
        for first in (0..=d).rev() {
            for p in enumerate_partitions(first) {
                prefix.push(p);
                rec(d - first, l - 1, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(d, l, &mut Vec::new(), &mut out);
    out
}

/// The set `P_d(l) = {λ : ℓ(λ) + |λ/l| ≤ d}`, by increasing size.
pub fn enumerate_p_set(d: usize, l: usize) -> Vec<Partition> {
    assert!(l >= 1, "level must be at least 1");
    // Every part p costs 1 + floor(p/l) >= (p+1)/l, so |λ| < d*l.
    let max_size = (d * l).saturating_sub(1);
    (0..=max_size)
        .flat_map(enumerate_partitions)
        .filter(|p| p.in_p_set(d, l))
        .collect()
}

/// The bijection `φ: M_d(l) → P_d(l)`.
pub fn phi(lambda: &Multipartition) -> Partition {
    let l = lambda.level();
    let mut parts = Vec::new();
    for (r0, comp) in lambda.components().iter().enumerate() {
        for &p in comp.parts() {
            parts.push((p - 1) * l + r0);
        }
    }
    Partition::new(parts)
}

/// Inverse of [`phi`]; rejects `μ ∉ P_d(l)`.
pub fn phi_inv(mu: &Partition, l: usize, d: usize) -> Result<Multipartition> {
    if l == 0 || !mu.in_p_set(d, l) {
        return Err(Error::NotInPSet(mu.to_string(), d, l));
    }
    let padded = mu.padded(d);
    let take = d - mu.floor_div(l).size();
    let mut comps = vec![Vec::new(); l];
    for &m in &padded[..take] {
        comps[m % l].push(m / l + 1);
    }
    Ok(Multipartition::new(comps.into_iter().map(Partition::new).collect()))
}

/// The residue multiset `i^q_λ`: for each box in row `i`, column `j` of
/// `λ^{(r)}` the residue `q_r + j − i`.
pub fn residue_tuple(lambda: &Multipartition, q: &[Rational]) -> Result<ResidueMultiset> {
    if lambda.level() != q.len() {
        return Err(Error::ParameterMismatch(format!(
            "multipartition of level {} with {} parameters",
            lambda.level(),
            q.len()
        )));
    }
    let mut entries = Vec::with_capacity(lambda.size());
    for (comp, qr) in lambda.components().iter().zip(q) {
        for (row, col) in comp.boxes() {
            entries.push(qr + rat(col as i64 - row as i64));
        }
    }
    Ok(ResidueMultiset::new(entries))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `Σ d!/(r_1! r_2! ⋯) (l/1)^{r_1} (l/2)^{r_2} ⋯` over partitions
/// `(1^{r_1} 2^{r_2} ⋯)` of `d`, evaluated exactly.
pub fn basd_rank(d: usize, l: usize) -> Result<u64> {
    let mut total = Rational::zero();
    let d_fact = Rational::from_integer(factorial(d));
    for p in enumerate_partitions(d) {
        let mut term = d_fact.clone();
        for a in 1..=d {
            let r = p.parts().iter().filter(|&&x| x == a).count();
            if r == 0 {
                continue;
            }
            term /= Rational::from_integer(factorial(r));
            let ratio = Rational::new(BigInt::from(l), BigInt::from(a));
            for _ in 0..r {
                term *= &ratio;
            }
        }
        total += term;
    }
    if !total.is_integer() {
        return Err(Error::NonIntegral(crate::rational_to_string(&total)));
    }
    total
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::NonIntegral(crate::rational_to_string(&total)))
}

/// Elementary symmetric polynomial `e_r` evaluated at `values`.
pub fn elementary_symmetric(r: usize, values: &[Rational]) -> Rational {
    // e[k] after processing a prefix of the values.
    let mut e = vec![Rational::zero(); r + 1];
    e[0] = Rational::one();
    for v in values {
        for k in (1..=r).rev() {
            let add = &e[k - 1] * v;
            e[k] += add;
        }
    }
    e[r].clone()
}

/// Checks `e_r(u_1..u_k, u+1) = e_r(u_1..u_k, u) + Σ_{s<r} (−1)^s e_{r−1−s}(u_1..u_k, u) u^s`.
pub fn elementary_symmetric_shift_identity(u_list: &[Rational], u: &Rational, r: usize) -> bool {
    let mut shifted = u_list.to_vec();
    shifted.push(u + Rational::one());
    let mut plain = u_list.to_vec();
    plain.push(u.clone());

    let lhs = elementary_symmetric(r, &shifted);
    let mut rhs = elementary_symmetric(r, &plain);
    let mut u_pow = Rational::one();
    for s in 0..r {
        let term = elementary_symmetric(r - 1 - s, &plain) * &u_pow;
        if s % 2 == 0 {
            rhs += term;
        } else {
            rhs -= term;
        }
        u_pow *= u;
    }
    lhs == rhs
}

/// Distinct rearrangements of `tuple`, in lexicographic order.
pub fn distinct_rearrangements(tuple: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = tuple.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // Standard next-permutation walk over the sorted multiset.
    loop {
        let n = cur.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("pivot exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
    out
}

/// The monomial symmetric polynomial of `μ` (over distinct rearrangements)
/// evaluated at the entries of `values`.
pub fn monomial_symmetric_eval(mu: &Partition, values: &[Rational]) -> Rational {
    if mu.length() > values.len() {
        return Rational::zero();
    }
    let mut total = Rational::zero();
    for nu in distinct_rearrangements(&mu.padded(values.len())) {
        let mut term = Rational::one();
        for (v, &e) in values.iter().zip(&nu) {
            for _ in 0..e {
                term *= v;
            }
        }
        total += term;
    }
    total
}

/// Standard Young tableaux of shape `λ`, each given as its row-wise filling.
pub fn standard_tableaux(shape: &Partition) -> Vec<Vec<Vec<usize>>> {
    fn rec(shape: &mut Vec<usize>, n: usize, fill: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if n == 0 {
            out.push(fill.to_vec());
            return;
        }
        // Place n in a removable corner, then recurse on the smaller shape.
        for r in 0..shape.len() {
            let len = shape[r];
            if len == 0 || (r + 1 < shape.len() && shape[r + 1] == len) {
                continue;
            }
            shape[r] -= 1;
            fill[r][len - 1] = n;
            rec(shape, n - 1, fill, out);
            shape[r] += 1;
        }
    }
    let mut sh = shape.parts().to_vec();
    let mut fill: Vec<Vec<usize>> = sh.iter().map(|&p| vec![0; p]).collect();
    let mut out = Vec::new();
    rec(&mut sh, shape.size(), &mut fill, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_frac;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn mp(v: &[&[usize]]) -> Multipartition {
        Multipartition::new(v.iter().map(|c| p(c)).collect())
    }

    /// p(n) by the pentagonal-number recurrence, independent of enumeration.
    fn partition_count(n: usize) -> usize {
        let mut pc = vec![0i64; n + 1];
        pc[0] = 1;
        for m in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                pc[m] += sign * pc[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    pc[m] += sign * pc[m - g2];
                }
                k += 1;
            }
        }
        pc[n] as usize
    }

    #[test]
    fn partitions_small() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(enumerate_partitions(5).len(), 7);
        for n in 0..=12 {
            assert_eq!(enumerate_partitions(n).len(), partition_count(n), "n={n}");
        }
    }

    #[test]
    fn partition_invariants() {
        for n in 0..=8 {
            for lam in enumerate_partitions(n) {
                assert_eq!(lam.size(), n);
                assert!(lam.parts().windows(2).all(|w| w[0] >= w[1]));
                assert!(lam.parts().iter().all(|&x| x > 0));
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn multipartitions_small() {
        assert_eq!(enumerate_multipartitions(0, 3), vec![Multipartition::empty(3)]);
        let m22 = enumerate_multipartitions(2, 2);
        assert_eq!(
            m22,
            vec![
                mp(&[&[2], &[]]),
                mp(&[&[1, 1], &[]]),
                mp(&[&[1], &[1]]),
                mp(&[&[], &[2]]),
                mp(&[&[], &[1, 1]]),
            ]
        );
        assert_eq!(enumerate_multipartitions(3, 2).len(), 10);
    }

    #[test]
    fn p_set_small() {
        assert_eq!(enumerate_p_set(0, 4), vec![Partition::empty()]);
        assert_eq!(
            enumerate_p_set(2, 2),
            vec![Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1]), p(&[3])]
        );
    }

    #[test]
    fn p_set_matches_multipartitions() {
        for d in 0..=5 {
            for l in 1..=3 {
                assert_eq!(
                    enumerate_p_set(d, l).len(),
                    enumerate_multipartitions(d, l).len(),
                    "d={d} l={l}"
                );
            }
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&mp(&[&[2], &[1]])), p(&[2, 1]));
        assert_eq!(phi(&Multipartition::empty(3)), Partition::empty());
        assert_eq!(phi_inv(&p(&[2, 1]), 2, 3).unwrap(), mp(&[&[2], &[1]]));
        assert!(phi_inv(&p(&[4]), 2, 2).is_err());
    }

    #[test]
    fn phi_is_bijection() {
        for d in 0..=5 {
            for l in 1..=3 {
                let ms = enumerate_multipartitions(d, l);
                let mut images: Vec<_> = ms.iter().map(phi).collect();
                for (m, img) in ms.iter().zip(&images) {
                    assert!(img.in_p_set(d, l));
                    assert_eq!(&phi_inv(img, l, d).unwrap(), m);
                }
                images.sort();
                images.dedup();
                assert_eq!(images.len(), ms.len());
            }
        }
    }

    #[test]
    fn residues() {
        let r = residue_tuple(&mp(&[&[4, 2, 1]]), &[rat(5)]).unwrap();
        let expected = ResidueMultiset::new([5, 6, 7, 8, 4, 5, 3].iter().map(|&x| rat(x)).collect());
        assert_eq!(r, expected);
        assert_eq!(
            residue_tuple(&mp(&[&[1]]), &[rat(0)]).unwrap(),
            ResidueMultiset::new(vec![rat(0)])
        );
        assert_eq!(
            residue_tuple(&mp(&[&[1], &[1]]), &[rat(0), rat(0)]).unwrap(),
            ResidueMultiset::new(vec![rat(0), rat(0)])
        );
        assert!(residue_tuple(&mp(&[&[1]]), &[rat(0), rat(1)]).is_err());
        // Non-integral parameters are fine.
        let half = residue_tuple(&mp(&[&[2]]), &[rat_frac(1, 2)]).unwrap();
        assert_eq!(half.entries(), &[rat_frac(1, 2), rat_frac(3, 2)]);
    }

    #[test]
    fn rank_formula() {
        assert_eq!(basd_rank(0, 5).unwrap(), 1);
        assert_eq!(basd_rank(1, 3).unwrap(), 3);
        assert_eq!(basd_rank(2, 2).unwrap(), 6);
        // Σ_w l^{#cycles(w)} is the rising factorial l(l+1)...(l+d-1).
        for d in 0..=6 {
            for l in 1..=4 {
                let rising: u64 = (0..d as u64).map(|k| l as u64 + k).product();
                assert_eq!(basd_rank(d, l).unwrap(), rising, "d={d} l={l}");
            }
        }
    }

    #[test]
    fn shift_identity_examples() {
        assert!(elementary_symmetric_shift_identity(&[], &rat(3), 0));
        assert!(elementary_symmetric_shift_identity(&[], &rat(5), 1));
        assert_eq!(elementary_symmetric(1, &[rat(6)]), rat(6));
        assert_eq!(elementary_symmetric(2, &[rat(1), rat(2), rat(3)]), rat(11));
    }

    #[test]
    fn rearrangements() {
        assert_eq!(distinct_rearrangements(&[1, 0, 0]).len(), 3);
        assert_eq!(distinct_rearrangements(&[2, 1, 0]).len(), 6);
        assert_eq!(distinct_rearrangements(&[]), vec![Vec::<usize>::new()]);
        // m_(2,1) at (0,-1): 0^2*(-1) + (-1)^2*0 = 0
        assert_eq!(monomial_symmetric_eval(&p(&[2, 1]), &[rat(0), rat(-1)]), rat(0));
        assert_eq!(monomial_symmetric_eval(&p(&[1]), &[rat(0), rat(1)]), rat(1));
    }

    #[test]
    fn tableaux_counts() {
        assert_eq!(standard_tableaux(&p(&[2, 1])).len(), 2);
        assert_eq!(standard_tableaux(&p(&[3, 2])).len(), 5);
        assert_eq!(standard_tableaux(&p(&[4, 2, 1])).len(), 35);
        // Σ (f^λ)^2 = d!
        for d in 1..=6 {
            let total: usize = enumerate_partitions(d)
                .iter()
                .map(|l| standard_tableaux(l).len().pow(2))
                .sum();
            assert_eq!(total, (1..=d).product::<usize>());
        }
    }

    #[test]
    fn text_round_trip() {
        let m = mp(&[&[2, 1], &[], &[1]]);
        assert_eq!(m.to_string(), "(2,1)|()|(1)");
        assert_eq!(m.to_string().parse::<Multipartition>().unwrap(), m);
        assert_eq!("∅|(1)".parse::<Multipartition>().unwrap(), mp(&[&[], &[1]]));
    }
}
