//! Dual Specht modules for `H_d^q` as explicit matrix representations.
//!
//! `S^λ` is realized as the left ideal `Q S_d · e_T` of the group algebra,
//! where `e_T` is the Young symmetrizer of the row-reading tableau `T`
//! (`1..λ_1` in the first row, and so on). Its dual is then made into an
//! `H_d`-module with `x_1 = q`, and modules are glued with the induction
//! product `M' ∘ M'' = H_d ⊗_{H_{d'} ⊗ H_{d''}} (M' ⊠ M'')`.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::combinatorics::{enumerate_multipartitions, residue_tuple, Multipartition, Partition, ResidueMultiset};
use crate::hecke::{perm_times_monomial, HeckeElement};
use crate::linalg::{EchelonBasis, RationalMatrix};
use crate::symgroup::{all_permutations, coset_representatives, parabolic_factor, Permutation};
use crate::{rational_to_string, Error, Rational, Result};

/// Matrices for `s_1..s_{d−1}` and, once affinized, for `x_1..x_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    d: usize,
    dim: usize,
    s: Vec<RationalMatrix>,
    x: Option<Vec<RationalMatrix>>,
}

impl Representation {
    /// The one-dimensional module of the trivial algebra `H_0`.
    pub fn unit() -> Self {
        Representation { d: 0, dim: 1, s: vec![], x: Some(vec![]) }
    }

    pub fn new(d: usize, s: Vec<RationalMatrix>, x: Option<Vec<RationalMatrix>>) -> Result<Self> {
        let dim = s.first().or(x.as_ref().and_then(|x| x.first())).map_or(1, |m| m.rows());
        let bad = |m: &RationalMatrix| m.rows() != dim || m.cols() != dim;
        if s.len() != d.saturating_sub(1) || s.iter().any(bad) {
            return Err(Error::InvalidInput("s_i matrices do not match d".into()));
        }
        if let Some(x) = &x {
            if x.len() != d || x.iter().any(bad) {
                return Err(Error::InvalidInput("x_i matrices do not match d".into()));
            }
        }
        Ok(Representation { d, dim, s, x })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrix of `s_i`.
    pub fn s(&self, i: usize) -> &RationalMatrix {
        &self.s[i - 1]
    }

    /// Matrix of `x_i`, if the module is affine.
    pub fn x(&self, i: usize) -> Option<&RationalMatrix> {
        self.x.as_ref().map(|x| &x[i - 1])
    }

    pub fn is_affine(&self) -> bool {
        self.x.is_some()
    }

    fn xs(&self) -> Result<&[RationalMatrix]> {
        self.x
            .as_deref()
            .ok_or_else(|| Error::InvalidInput("module has no x_i action".into()))
    }

    /// Matrix of a permutation, through a reduced word.
    pub fn perm_matrix(&self, w: &Permutation) -> RationalMatrix {
        let mut m = RationalMatrix::identity(self.dim);
        for &i in &w.reduced_word() {
            m = m.mul(self.s(i)).expect("square");
        }
        m
    }

    /// Matrix of an element of `H_d` (or `H_d^f`) given in PBW form.
    pub fn act(&self, elem: &HeckeElement) -> Result<RationalMatrix> {
        if elem.spec().d() != self.d {
            return Err(Error::DegreeMismatch(elem.spec().d(), self.d));
        }
        let xs = self.xs()?;
        let mut total = RationalMatrix::zeros(self.dim, self.dim);
        for (k, c) in elem.terms().iter() {
            let mut m = RationalMatrix::identity(self.dim);
            for (i, &e) in k.exps.iter().enumerate() {
                for _ in 0..e {
                    m = m.mul(&xs[i])?;
                }
            }
            m = m.mul(&self.perm_matrix(&k.perm))?;
            total = total.add(&m.scale(c))?;
        }
        Ok(total)
    }

    /// `s_i² = 1`, the braid relations and far commutation.
    pub fn check_symmetric_relations(&self) -> Result<()> {
        let id = RationalMatrix::identity(self.dim);
        let fail = |what: String| Err(Error::Verification(what));
        for i in 1..self.d {
            if self.s(i).mul(self.s(i))? != id {
                return fail(format!("s{i}^2 != 1"));
            }
            for j in i + 1..self.d {
                let (a, b) = (self.s(i), self.s(j));
                if j == i + 1 {
                    if a.mul(b)?.mul(a)? != b.mul(a)?.mul(b)? {
                        return fail(format!("braid relation fails for s{i}, s{j}"));
                    }
                } else if a.mul(b)? != b.mul(a)? {
                    return fail(format!("s{i} and s{j} do not commute"));
                }
            }
        }
        Ok(())
    }

    /// All defining relations of the degenerate affine Hecke algebra.
    pub fn check_affine_relations(&self) -> Result<()> {
        self.check_symmetric_relations()?;
        let xs = self.xs()?;
        let fail = |what: String| Err(Error::Verification(what));
        let id = RationalMatrix::identity(self.dim);
        for i in 0..self.d {
            for j in i + 1..self.d {
                if xs[i].mul(&xs[j])? != xs[j].mul(&xs[i])? {
                    return fail(format!("x{} and x{} do not commute", i + 1, j + 1));
                }
            }
        }
        for i in 1..self.d {
            let s = self.s(i);
            if s.mul(&xs[i])? != xs[i - 1].mul(s)?.add(&id)? {
                return fail(format!("s{i} x{} != x{i} s{i} + 1", i + 1));
            }
            for j in 1..=self.d {
                if j != i && j != i + 1 && s.mul(&xs[j - 1])? != xs[j - 1].mul(s)? {
                    return fail(format!("s{i} and x{j} do not commute"));
                }
            }
        }
        Ok(())
    }

    /// `f(x_1)` for `f = Π (x − q_r)`.
    pub fn eval_at_x1(&self, roots: &[Rational]) -> Result<RationalMatrix> {
        let x1 = &self.xs()?[0];
        let id = RationalMatrix::identity(self.dim);
        let mut m = id.clone();
        for q in roots {
            m = m.mul(&x1.sub(&id.scale(q))?)?;
        }
        Ok(m)
    }

    pub fn to_json(&self) -> Value {
        let mat = |m: &RationalMatrix| {
            (0..m.rows())
                .map(|i| m.row(i).iter().map(rational_to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        };
        let mut obj = json!({
            "d": self.d,
            "dim": self.dim,
            "s": self.s.iter().map(mat).collect::<Vec<_>>(),
        });
        if let Some(x) = &self.x {
            obj["x"] = json!(x.iter().map(mat).collect::<Vec<_>>());
        }
        obj
    }
}

/// Row-reading tableau of shape `λ`: its rows as lists of entries.
fn row_reading_tableau(lambda: &Partition) -> Vec<Vec<usize>> {
    let mut next = 1;
    lambda
        .parts()
        .iter()
        .map(|&len| {
            let row: Vec<usize> = (next..next + len).collect();
            next += len;
            row
        })
        .collect()
}

/// All permutations preserving each block of `blocks` setwise.
fn block_stabilizer(blocks: &[Vec<usize>], d: usize) -> Vec<Permutation> {
    let mut out = vec![Permutation::identity(d)];
    for block in blocks {
        let local = all_permutations(block.len());
        let mut next = Vec::with_capacity(out.len() * local.len());
        for w in &out {
            for p in &local {
                let mut images = w.images();
                for (k, &b) in block.iter().enumerate() {
                    images[b - 1] = block[p.apply(k + 1) - 1];
                }
                next.push(Permutation::from_images(images).expect("block permutation"));
            }
        }
        out = next;
    }
    out
}

fn sign(w: &Permutation) -> i64 {
    if w.inversions().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The Specht module `S^λ` of `Q S_d` with matrices for `s_1..s_{d−1}`.
pub fn specht_representation(lambda: &Partition) -> Result<Representation> {
    let d = lambda.size();
    if d == 0 {
        return Ok(Representation { d: 0, dim: 1, s: vec![], x: None });
    }
    let perms = all_permutations(d);
    let index: HashMap<&Permutation, usize> = perms.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let n = perms.len();

    // e_T = (Σ_{c ∈ C_T} sgn(c) c)(Σ_{r ∈ R_T} r)
    let rows = row_reading_tableau(lambda);
    let cols: Vec<Vec<usize>> = lambda
        .conjugate()
        .parts()
        .iter()
        .enumerate()
        .map(|(j, &len)| (0..len).map(|i| rows[i][j]).collect())
        .collect();
    let row_group = block_stabilizer(&rows, d);
    let col_group = block_stabilizer(&cols, d);
    let mut e = vec![Rational::zero(); n];
    for c in &col_group {
        let sg = Rational::from_integer(sign(c).into());
        for r in &row_group {
            e[index[&c.compose_unchecked(r)]] += &sg;
        }
    }

    // Left multiplication by s_i permutes the group-algebra coordinates.
    let shifts: Vec<Vec<usize>> = (1..d)
        .map(|i| {
            let si = Permutation::simple(i, d);
            perms.iter().map(|g| index[&si.compose_unchecked(g)]).collect()
        })
        .collect();
    let left = |i: usize, v: &[Rational]| {
        let mut out = vec![Rational::zero(); n];
        for (g, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out[shifts[i - 1][g]] = c.clone();
            }
        }
        out
    };

    let mut span = EchelonBasis::new(n);
    span.insert(e.clone());
    let mut frontier = vec![e];
    while let Some(v) = frontier.pop() {
        for i in 1..d {
            let w = left(i, &v);
            if span.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }

    let basis = span.rows().to_vec();
    let dim = basis.len();
    let s = (1..d)
        .map(|i| {
            let mut m = RationalMatrix::zeros(dim, dim);
            for (j, b) in basis.iter().enumerate() {
                let coords = span.coordinates(&left(i, b)).expect("left ideal is closed");
                for (k, c) in coords.into_iter().enumerate() {
                    m[(k, j)] = c;
                }
            }
            m
        })
        .collect();
    Ok(Representation { d, dim, s, x: None })
}

/// The contragredient module: every `s_i` becomes `(s_i^{-1})^T`.
pub fn dualize(rep: &Representation) -> Result<Representation> {
    if rep.is_affine() && rep.d > 0 {
        return Err(Error::InvalidInput("dualize expects a symmetric group module".into()));
    }
    let s = rep.s.iter().map(|m| Ok(m.inverse()?.transpose())).collect::<Result<_>>()?;
    Ok(Representation { d: rep.d, dim: rep.dim, s, x: None })
}

/// Extends a symmetric group module to `H_d` with `x_1 = q` and
/// `x_{i+1} = s_i x_i s_i + s_i`.
pub fn affinize(rep: &Representation, q: &Rational) -> Result<Representation> {
    let mut x = Vec::with_capacity(rep.d);
    if rep.d > 0 {
        x.push(RationalMatrix::identity(rep.dim).scale(q));
    }
    for i in 1..rep.d {
        let s = rep.s(i);
        let next = s.mul(&x[i - 1])?.mul(s)?.add(s)?;
        x.push(next);
    }
    Ok(Representation { d: rep.d, dim: rep.dim, s: rep.s.clone(), x: Some(x) })
}

fn kron(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let mut out = RationalMatrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let c = &a[(i, j)];
            if c.is_zero() {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    if !b[(k, l)].is_zero() {
                        out[(i * b.rows() + k, j * b.cols() + l)] = c * &b[(k, l)];
                    }
                }
            }
        }
    }
    out
}

/// `M' ∘ M''`, with basis (coset representative `u`) × (basis of `M' ⊠ M''`).
pub fn induce_product(m1: &Representation, m2: &Representation) -> Result<Representation> {
    if m2.d == 0 {
        return Ok(m1.clone());
    }
    if m1.d == 0 {
        return Ok(m2.clone());
    }
    let (x1, x2) = (m1.xs()?, m2.xs()?);
    let (d1, d2) = (m1.d, m2.d);
    let d = d1 + d2;
    let reps = coset_representatives(d1, d2);
    let rep_index: HashMap<&Permutation, usize> = reps.iter().enumerate().map(|(i, u)| (u, i)).collect();
    let inner = m1.dim * m2.dim;
    let dim = reps.len() * inner;

    // Action of y ∈ S_{d'} × S_{d''} followed by x^β on M' ⊠ M''.
    let parabolic = |y: &Permutation, beta: &[u32]| -> Result<RationalMatrix> {
        let mut a = RationalMatrix::identity(m1.dim);
        let mut b = RationalMatrix::identity(m2.dim);
        for &i in &y.reduced_word() {
            if i < d1 {
                a = a.mul(m1.s(i))?;
            } else if i > d1 {
                b = b.mul(m2.s(i - d1))?;
            } else {
                return Err(Error::Verification("coset factor left the parabolic subgroup".into()));
            }
        }
        for (j, &e) in beta.iter().enumerate() {
            for _ in 0..e {
                if j < d1 {
                    a = a.mul(&x1[j])?;
                } else {
                    b = b.mul(&x2[j - d1])?;
                }
            }
        }
        Ok(kron(&a, &b))
    };
    let place = |m: &mut RationalMatrix, row_block: usize, col_block: usize, block: &RationalMatrix, c: &Rational| {
        for i in 0..inner {
            for j in 0..inner {
                if !block[(i, j)].is_zero() {
                    m[(row_block * inner + i, col_block * inner + j)] += c * &block[(i, j)];
                }
            }
        }
    };

    let one = Rational::one();
    let mut s = Vec::with_capacity(d.saturating_sub(1));
    for i in 1..d {
        let mut m = RationalMatrix::zeros(dim, dim);
        for (col, u) in reps.iter().enumerate() {
            let (v, y) = parabolic_factor(&u.simple_times(i), d1);
            place(&mut m, rep_index[&v], col, &parabolic(&y, &vec![0; d])?, &one);
        }
        s.push(m);
    }

    // x_j u: straighten u^{-1} x_j = Σ c x^β w in H_d and apply the
    // anti-involution fixing every s_i and x_i, giving x_j u = Σ c w^{-1} x^β.
    let mut x = Vec::with_capacity(d);
    for j in 1..=d {
        let mut m = RationalMatrix::zeros(dim, dim);
        let mut e = vec![0; d];
        e[j - 1] = 1;
        for (col, u) in reps.iter().enumerate() {
            for (k, c) in perm_times_monomial(&u.inverse(), &e).iter() {
                let (v, y) = parabolic_factor(&k.perm.inverse(), d1);
                place(&mut m, rep_index[&v], col, &parabolic(&y, &k.exps)?, c);
            }
        }
        x.push(m);
    }
    Ok(Representation { d, dim, s, x: Some(x) })
}

/// `S^q_λ = S^{q_1}_{λ^{(1)}} ∘ ⋯ ∘ S^{q_l}_{λ^{(l)}}`.
pub fn dual_specht(lambda: &Multipartition, q: &[Rational]) -> Result<Representation> {
    if lambda.level() != q.len() {
        return Err(Error::ParameterMismatch(format!(
            "multipartition of level {} with {} parameters",
            lambda.level(),
            q.len()
        )));
    }
    let mut module = Representation::unit();
    for (part, qr) in lambda.components().iter().zip(q) {
        if part.size() == 0 {
            continue;
        }
        let factor = affinize(&dualize(&specht_representation(part)?)?, qr)?;
        module = induce_product(&module, &factor)?;
    }
    Ok(module)
}

/// Power sums `Σ_i x_i^r`, `1 ≤ r ≤ d`, as scalars on the module.
fn power_sum_scalars(rep: &Representation) -> Result<Vec<Rational>> {
    let xs = rep.xs()?;
    let mut powers: Vec<RationalMatrix> = xs.to_vec();
    let mut out = Vec::with_capacity(rep.d);
    for r in 1..=rep.d {
        if r > 1 {
            for (p, x) in powers.iter_mut().zip(xs) {
                *p = p.mul(x)?;
            }
        }
        let mut sum = RationalMatrix::zeros(rep.dim, rep.dim);
        for p in &powers {
            sum = sum.add(p)?;
        }
        let c = sum
            .as_scalar()
            .ok_or_else(|| Error::NonScalarAction(format!("p_d(({r})) is not a scalar")))?;
        out.push(c);
    }
    Ok(out)
}

/// The residue multiset `i` with the module of central character `χ(i)`,
/// found among `{residue_tuple(μ, q) : μ ∈ M_d(l)}`.
pub fn central_character(rep: &Representation, q: &[Rational]) -> Result<ResidueMultiset> {
    let scalars = power_sum_scalars(rep)?;
    for mu in enumerate_multipartitions(rep.d, q.len()) {
        let cand = residue_tuple(&mu, q)?;
        let matches = scalars.iter().enumerate().all(|(r, c)| {
            let mut total = Rational::zero();
            for v in cand.entries() {
                let mut t = Rational::one();
                for _ in 0..=r {
                    t *= v;
                }
                total += t;
            }
            &total == c
        });
        if matches {
            return Ok(cand);
        }
    }
    Err(Error::NoMatchingCharacter)
}
