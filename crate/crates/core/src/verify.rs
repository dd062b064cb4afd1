//! The oracle suite: every structural statement about `H_d^f`, its graded
//! algebra, centers and blocks, checked by brute force at small rank.
//!
//! Each check is a closure returning a short detail string or an error.
//! Checks are grouped by the numbered acceptance criterion they serve, run
//! concurrently, and reported in a fixed order.

use std::panic::{catch_unwind, AssertUnwindSafe};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::blocks::{block_center_dimensions, block_idempotents};
use crate::combinatorics::{
    basd_rank, elementary_symmetric_shift_identity, enumerate_multipartitions, enumerate_p_set,
    enumerate_partitions, phi, residue_tuple, standard_tableaux, Multipartition, Partition, ResidueMultiset,
};
use crate::graded::{
    center_basis_bruteforce as graded_center, centralizer_basis, class_sum, colored_cycle_product,
    decompose_disjoint, enumerate_disjoint_products, expand_in_class_sums, h_poly, murphy_element,
    product_element, y_element, ColoredCycle, GradedElement,
};
use crate::hecke::{
    center_basis_bruteforce, center_commutant, p_element, power_sum_generation_check, CyclotomicSpec,
    HeckeAlgebra, HeckeElement,
};
use crate::linalg::EchelonBasis;
use crate::pbw::{express_in, rank_of, same_span, saturate_subalgebra, KeyIndex, LinComb};
use crate::rational::{rat, rat_frac};
use crate::specht::{affinize, central_character, dual_specht, dualize, induce_product, specht_representation, Representation};
use crate::symgroup::{all_permutations, Cycle, Permutation};
use crate::{Error, Rational, Result};

fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Verification(msg.into()))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        fail(msg())
    }
}

fn show(roots: &[Rational]) -> String {
    let parts: Vec<_> = roots.iter().map(crate::rational_to_string).collect();
    format!("({})", parts.join(","))
}

pub fn algebra(roots: &[Rational], d: usize) -> HeckeAlgebra {
    HeckeAlgebra::new(CyclotomicSpec::from_roots(roots.to_vec(), d).expect("non-empty roots"))
}

/// Root choices for level `l`: all zero, all equal and nonzero, distinct
/// small, and repeated with a gap, without duplicates.
pub fn root_choices(l: usize) -> Vec<Vec<Rational>> {
    let mut gap = vec![rat(0); l];
    gap[l - 1] = rat(2);
    let all = [
        vec![rat(0); l],
        vec![rat(3); l],
        (0..l as i64).map(rat).collect(),
        gap,
    ];
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for r in all {
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// Roots far enough apart that every residue multiset is distinct.
pub fn generic_roots(l: usize) -> Vec<Rational> {
    (0..l as i64).map(|r| rat(100 * r)).collect()
}

// ---------------------------------------------------------------------------
// Centers of H_d^f

/// Brute-force center of dimension `|M_d(l)|`, spanned by the independent
/// central elements `p_d(μ)`.
pub fn check_center(roots: &[Rational], d: usize) -> Result<String> {
    let h = algebra(roots, d);
    let basis = center_basis_bruteforce(&h)?;
    let ps: Vec<HeckeElement> = enumerate_p_set(d, h.l()).iter().map(|m| p_element(&h, m)).collect::<Result<_>>()?;
    for p in &ps {
        ensure(h.is_central(p)?, || format!("p_d element {p} is not central"))?;
    }
    let index = KeyIndex::new(d, h.l());
    let combs: Vec<LinComb> = ps.iter().map(|p| p.terms().clone()).collect();
    ensure(rank_of(&index, &combs) == ps.len(), || "p_d elements are dependent".into())?;
    Ok(format!("dim Z = {}", basis.len()))
}

fn sharp_key(mu: &Partition, l: usize) -> usize {
    mu.floor_div(l).size() + mu.length()
}

/// `gr_r p_d(μ) = m_d(μ) + (lower m_d(ν))` and the leading parts of central
/// elements are central in the graded algebra.
pub fn check_gr_of_center(roots: &[Rational], d: usize) -> Result<String> {
    let h = algebra(roots, d);
    let l = h.l();
    let index = KeyIndex::new(d, l);
    let p_set = enumerate_p_set(d, l);
    let ms: Vec<GradedElement> = p_set.iter().map(|m| murphy_element(d, l, m)).collect::<Result<_>>()?;
    let m_combs: Vec<LinComb> = ms.iter().map(|m| m.terms().clone()).collect();
    for (mu, m) in p_set.iter().zip(&ms) {
        let p = p_element(&h, mu)?;
        let r = (mu.size() - mu.floor_div(l).size()) as u32;
        ensure(p.filtration_degree().is_none_or(|t| t <= r), || {
            format!("p_d({mu}) has filtration degree above {r}")
        })?;
        let rest = &p.degree_part(r) - m;
        let coeffs = express_in(&index, &m_combs, rest.terms())
            .ok_or_else(|| Error::Verification(format!("gr p_d({mu}) is not central")))?;
        for (nu, c) in p_set.iter().zip(&coeffs) {
            ensure(c.is_zero() || sharp_key(nu, l) < sharp_key(mu, l), || {
                format!("gr p_d({mu}) involves m_d({nu}) out of order")
            })?;
        }
    }
    for z in center_commutant(&h) {
        let top = z.filtration_degree().unwrap_or(0);
        ensure(z.gr_component(top)?.is_central(), || format!("leading part of {z} is not central"))?;
    }
    Ok(format!("{} elements triangular", p_set.len()))
}

/// Left multiplication by the generators on the PBW basis satisfies the
/// defining relations, including `f(x_1) = 0`.
pub fn check_regular_representation(roots: &[Rational], d: usize) -> Result<String> {
    let h = algebra(roots, d);
    let index = KeyIndex::new(d, h.l());
    let x: Vec<HeckeElement> = (1..=d).map(|i| h.x(i)).collect::<Result<_>>()?;
    let s: Vec<HeckeElement> = (1..d).map(|i| h.s(i)).collect::<Result<_>>()?;
    let act = |g: &HeckeElement, v: &HeckeElement| h.multiply(g, v);
    for key in index.keys() {
        let v = h.from_key(key.clone(), rat(1));
        let mut fx = h.zero();
        let mut pw = v.clone();
        let coeffs = h.spec().coeffs();
        let l = coeffs.len();
        for k in 0..=l {
            let c = if k == l { Rational::one() } else { coeffs[l - 1 - k].clone() };
            fx = &fx + &pw.scale(&c);
            pw = act(&x[0], &pw)?;
        }
        ensure(fx.is_zero(), || format!("f(x_1) does not kill {key:?}"))?;
        for i in 0..d {
            for j in i + 1..d {
                ensure(act(&x[i], &act(&x[j], &v)?)? == act(&x[j], &act(&x[i], &v)?)?, || {
                    format!("x{} x{} != x{} x{}", i + 1, j + 1, j + 1, i + 1)
                })?;
            }
        }
        for i in 1..d {
            let si = &s[i - 1];
            ensure(act(si, &act(si, &v)?)? == v, || format!("s{i}^2 != 1"))?;
            let lhs = act(si, &act(&x[i], &v)?)?;
            let rhs = &act(&x[i - 1], &act(si, &v)?)? + &v;
            ensure(lhs == rhs, || format!("s{i} x{} != x{i} s{i} + 1", i + 1))?;
            for j in 1..=d {
                if j != i && j != i + 1 {
                    ensure(act(si, &act(&x[j - 1], &v)?)? == act(&x[j - 1], &act(si, &v)?)?, || {
                        format!("s{i} x{j} != x{j} s{i}")
                    })?;
                }
            }
            for j in i + 1..d {
                let sj = &s[j - 1];
                let (l, r) = if j == i + 1 {
                    (act(si, &act(sj, &act(si, &v)?)?)?, act(sj, &act(si, &act(sj, &v)?)?)?)
                } else {
                    (act(si, &act(sj, &v)?)?, act(sj, &act(si, &v)?)?)
                };
                ensure(l == r, || format!("relation between s{i} and s{j} fails"))?;
            }
        }
    }
    Ok(format!("{} basis vectors", index.len()))
}

/// Level one with `f = x`: `x_i = Σ_{j<i} (j i)` and the center of the
/// group algebra has dimension `p(d)`, spanned by symmetric polynomials in
/// the Jucys-Murphy elements.
pub fn check_murphy(d: usize) -> Result<String> {
    let h = algebra(&[rat(0)], d);
    for i in 1..=d {
        let mut jm = h.zero();
        for j in 1..i {
            jm = &jm + &h.perm(Permutation::transposition(j, i, d));
        }
        ensure(h.x(i)? == jm, || format!("x{i} is not the Jucys-Murphy element"))?;
    }
    let basis = center_basis_bruteforce(&h)?;
    let p = enumerate_partitions(d).len();
    ensure(basis.len() == p, || format!("center dimension {} != p({d}) = {p}", basis.len()))?;
    Ok(format!("dim Z = {p}"))
}

pub fn check_power_sums(roots: &[Rational], d: usize) -> Result<String> {
    ensure(power_sum_generation_check(&algebra(roots, d))?, || {
        "power sums do not generate the center".into()
    })?;
    Ok("generated".into())
}

// ---------------------------------------------------------------------------
// The graded algebra

/// `dim Q_d` equals the rank formula, and every product of disjoint colored
/// cycles lies in `Q_d`, independently.
pub fn check_centralizer(d: usize, l: usize) -> Result<String> {
    let rank = basd_rank(d, l)? as usize;
    let basis = centralizer_basis(d, l);
    ensure(basis.len() == rank, || format!("dim Q_d = {} but the formula gives {rank}", basis.len()))?;
    let index = KeyIndex::new(d, l);
    let mut span = EchelonBasis::new(index.len());
    for b in &basis {
        span.insert(b.terms().to_vector(&index));
    }
    let products = enumerate_disjoint_products(d, l);
    ensure(products.len() == rank, || format!("{} disjoint products", products.len()))?;
    let elems: Vec<LinComb> = products.iter().map(|p| product_element(p, d, l).terms().clone()).collect();
    for (p, e) in products.iter().zip(&elems) {
        ensure(span.contains(&e.to_vector(&index)), || format!("product {p:?} is not in Q_d"))?;
    }
    ensure(rank_of(&index, &elems) == rank, || "disjoint products are dependent".into())?;
    Ok(format!("dim Q_d = {rank}"))
}

/// Every cycle of `S_d` (1-cycles included).
pub fn all_cycles(d: usize) -> Vec<Cycle> {
    let mut out: Vec<Cycle> = (1..=d).map(|i| Cycle::new(vec![i]).expect("1-cycle")).collect();
    for w in all_permutations(d) {
        let nontrivial: Vec<Cycle> = w.cycle_decomposition().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.len() == 1 {
            out.push(nontrivial.into_iter().next().expect("one cycle"));
        }
    }
    out
}

/// The closed form for colored-cycle products agrees with multiplication in
/// the twisted tensor algebra for all ordered pairs and colors.
pub fn check_cycle_products(d: usize, l: usize) -> Result<String> {
    let colored: Vec<ColoredCycle> = all_cycles(d)
        .into_iter()
        .flat_map(|c| (0..l).map(move |r| (c.clone(), r)))
        .map(|(c, r)| ColoredCycle::new(c, r, l))
        .collect::<Result<_>>()?;
    let elems: Vec<GradedElement> = colored.iter().map(|c| c.element(d, l)).collect();
    let mut pairs = 0;
    for (a, ea) in colored.iter().zip(&elems) {
        for (b, eb) in colored.iter().zip(&elems) {
            let closed = colored_cycle_product(a, b, l).to_element(d, l);
            ensure(closed == ea.multiply(eb)?, || format!("closed form fails for {a} * {b}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} ordered pairs"))
}

fn cc(points: &[usize], color: usize, l: usize) -> Result<ColoredCycle> {
    ColoredCycle::new(Cycle::new(points.to_vec())?, color, l)
}

/// The three worked products and the composition convention they fix.
pub fn check_worked_examples() -> Result<String> {
    let v = Cycle::new(vec![1, 2, 3])?.to_permutation(9);
    let w = Cycle::new(vec![7, 9, 2, 1])?.to_permutation(9);
    let vw = v.compose(&w)?;
    ensure(vw == Cycle::new(vec![1, 7, 9, 3])?.to_permutation(9), || format!("(1 2 3)(7 9 2 1) = {vw}"))?;

    let d = 9;
    let l = 6;
    let lhs = colored_cycle_product(&cc(&[1, 2, 3], 4, l)?, &cc(&[7, 9, 2], 1, l)?, l);
    let rhs = cc(&[1, 2, 7, 9, 3], 5, l)?.element(d, l);
    ensure(lhs.to_element(d, l) == rhs, || format!("first example gives {lhs}"))?;
    let generic = cc(&[1, 2, 3], 4, l)?.element(d, l).multiply(&cc(&[7, 9, 2], 1, l)?.element(d, l))?;
    ensure(generic == rhs, || "first example fails generically".into())?;

    for l in [2, 3] {
        let a = cc(&[1, 2, 3], 4.min(l - 1), l)?;
        let b = cc(&[7, 9, 2, 1], 1, l)?;
        ensure(colored_cycle_product(&a, &b, l).to_element(d, l).is_zero(), || "second example".into())?;
        ensure(a.element(d, l).multiply(&b.element(d, l))?.is_zero(), || "second example generically".into())?;
        let zero_rhs = cc(&[1, 2, 3], 0, l)?.element(d, l).multiply(&cc(&[7, 9, 3, 2, 1], 0, l)?.element(d, l))?;
        ensure(zero_rhs.is_zero(), || "(1 2 3)^(0) (7 9 3 2 1)^(0) is not zero".into())?;

        let third = cc(&[1, 2, 3], 0, l)?.element(d, l).multiply(&cc(&[7, 9, 2, 1], 0, l)?.element(d, l))?;
        let want = product_element(&[cc(&[1, 7, 9, 3], l - 1, l)?, cc(&[2], l - 1, l)?], d, l).scale(&rat(l as i64));
        ensure(third == want, || format!("third example fails for l={l}"))?;
        let closed = colored_cycle_product(&cc(&[1, 2, 3], 0, l)?, &cc(&[7, 9, 2, 1], 0, l)?, l);
        ensure(closed.to_element(d, l) == want, || format!("closed form of third example gives {closed}"))?;
    }
    Ok("three worked products".into())
}

/// `{z_d(λ)}` and `{m_d(μ)}` are bases of the graded center, with
/// `m_d(φ(λ)) = z_d(λ) + (terms z_d(ν) with #ν < #λ)`.
pub fn check_graded_center_bases(d: usize, l: usize) -> Result<String> {
    let center = graded_center(d, l);
    let index = KeyIndex::new(d, l);
    let multis = enumerate_multipartitions(d, l);
    ensure(center.len() == multis.len(), || format!("graded center has dimension {}", center.len()))?;
    let c_combs: Vec<LinComb> = center.iter().map(|c| c.terms().clone()).collect();
    let zs: Vec<LinComb> = multis.iter().map(|m| class_sum(m).terms().clone()).collect();
    ensure(same_span(&index, &c_combs, &zs) && rank_of(&index, &zs) == zs.len(), || {
        "class sums are not a basis of the center".into()
    })?;
    let mut ms = Vec::with_capacity(multis.len());
    for lambda in &multis {
        let m = murphy_element(d, l, &phi(lambda))?;
        let coeffs = expand_in_class_sums(&m)?;
        ensure(coeffs.get(lambda) == Some(&Rational::one()), || {
            format!("m_d(phi({lambda})) has coefficient {:?} on z_d({lambda})", coeffs.get(lambda))
        })?;
        for (nu, _) in coeffs.iter().filter(|(nu, _)| *nu != lambda) {
            ensure(nu.sharp() < lambda.sharp(), || format!("m_d(phi({lambda})) involves z_d({nu})"))?;
        }
        ms.push(m.terms().clone());
    }
    ensure(same_span(&index, &c_combs, &ms) && rank_of(&index, &ms) == ms.len(), || {
        "Murphy elements are not a basis of the center".into()
    })?;
    Ok(format!("{} basis elements", multis.len()))
}

/// All `a`-cycles `A` summed with color `r`: `z_d(a^{(r)})`.
fn cycle_class_sum(d: usize, l: usize, a: usize, r: usize) -> Result<GradedElement> {
    let mut out = GradedElement::zero(d, l);
    for c in all_cycles(d).into_iter().filter(|c| c.len() == a) {
        out = &out + &ColoredCycle::new(c, r, l)?.element(d, l);
    }
    Ok(out)
}

/// The graded center is generated by the `z_d(a^{(r)})`.
pub fn check_graded_generation(d: usize, l: usize) -> Result<String> {
    let index = KeyIndex::new(d, l);
    let mut gens = Vec::new();
    for a in 1..=d {
        for r in 0..l {
            gens.push(cycle_class_sum(d, l, a, r)?.terms().clone());
        }
    }
    let one = GradedElement::one(d, l);
    let span = saturate_subalgebra(&index, one.terms(), &gens, |a, b| {
        GradedElement::from_comb(d, l, a.clone())
            .multiply(&GradedElement::from_comb(d, l, b.clone()))
            .expect("same algebra")
            .terms()
            .clone()
    });
    let center = graded_center(d, l);
    ensure(
        span.rank() == center.len() && center.iter().all(|z| span.contains(&z.terms().to_vector(&index))),
        || format!("generated subalgebra has dimension {}", span.rank()),
    )?;
    Ok(format!("dim {}", span.rank()))
}

/// `h_r(I) h_s(J) = l^{c−1} h_{r+s+(c−1)(l−1)}(I ∪ J)` whenever `|I ∩ J| = c > 0`.
pub fn check_h_products(d: usize, l: usize) -> Result<String> {
    let subsets: Vec<Vec<usize>> = (1u32..1 << d)
        .map(|mask| (1..=d).filter(|i| mask & (1 << (i - 1)) != 0).collect())
        .collect();
    let mut count = 0;
    for i in &subsets {
        for j in &subsets {
            let c = i.iter().filter(|x| j.contains(x)).count();
            if c == 0 {
                continue;
            }
            let mut union: Vec<usize> = i.iter().chain(j).copied().collect();
            union.sort_unstable();
            union.dedup();
            for r in 0..=l {
                for s in 0..=l {
                    let lhs = h_poly(d, l, r, i).multiply(&h_poly(d, l, s, j))?;
                    let scale = rat((l as i64).pow(c as u32 - 1));
                    let rhs = h_poly(d, l, r + s + (c - 1) * (l - 1), &union).scale(&scale);
                    ensure(lhs == rhs, || format!("h_{r}({i:?}) h_{s}({j:?}) fails"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} products"))
}

/// `elem` is a combination of `A_1^{(l−1)} ⋯ A_m^{(l−1)}` with disjoint
/// cycles inside `{1..i}` whose union contains `i` and has at most `p`
/// points. At level one the color-0 1-cycle `(i)` is implicit.
fn top_color_terms(elem: &GradedElement, i: usize, p: usize) -> Result<()> {
    let l = elem.l();
    for (cycles, _) in decompose_disjoint(elem)? {
        let mut union: Vec<usize> = cycles.iter().flat_map(|c| c.cycle().support()).collect();
        if l == 1 && !union.contains(&i) {
            union.push(i);
        }
        let shown = || format!("{cycles:?}");
        ensure(cycles.iter().all(|c| c.color() + 1 == l), || format!("term {} has a lower color", shown()))?;
        ensure(union.iter().all(|&x| x <= i), || format!("term {} leaves 1..{i}", shown()))?;
        ensure(union.contains(&i), || format!("term {} misses {i}", shown()))?;
        ensure(union.len() <= p, || format!("term {} has more than {p} points", shown()))?;
    }
    Ok(())
}

/// Colored Jucys-Murphy powers: `y_i(l)^p = y_i(pl) + (*)`.
pub fn check_jm_powers(d: usize, l: usize, max_p: usize) -> Result<String> {
    for i in 1..=d {
        let y = y_element(d, l, i, l);
        let mut pw = GradedElement::one(d, l);
        for p in 0..=max_p {
            let rest = &pw - &y_element(d, l, i, p * l);
            top_color_terms(&rest, i, p).map_err(|e| Error::Verification(format!("y_{i}(l)^{p}: {e}")))?;
            pw = pw.multiply(&y)?;
        }
    }
    Ok(format!("i <= {d}, p <= {max_p}"))
}

/// Leading terms of `x_i^k` with `k = (a−1)l + r`.
pub fn check_power_leading_terms(roots: &[Rational], d: usize, max_a: usize) -> Result<String> {
    let h = algebra(roots, d);
    let l = h.l();
    for i in 1..=d {
        for a in 1..=max_a {
            for r in 0..l {
                let k = (a - 1) * l + r;
                let deg = ((a - 1) * (l - 1) + r) as u32;
                let x = h.reduce_high_power(i, k as u32)?;
                ensure(x.filtration_degree().is_none_or(|t| t <= deg), || {
                    format!("x_{i}^{k} is above filtered degree {deg}")
                })?;
                let rest = &x.degree_part(deg) - &y_element(d, l, i, k);
                if r > 0 {
                    ensure(rest.is_zero(), || format!("gr x_{i}^{k} != y_{i}({k})"))?;
                } else {
                    top_color_terms(&rest, i, a - 1)
                        .map_err(|e| Error::Verification(format!("gr x_{i}^{k}: {e}")))?;
                }
            }
        }
    }
    Ok(format!("i <= {d}, a <= {max_a}"))
}

/// The shift identity for elementary symmetric functions on random inputs.
pub fn check_shift_identity(seed: u64, samples: usize) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = |rng: &mut ChaCha8Rng| rat_frac(rng.gen_range(-20..=20), rng.gen_range(1..=7));
    for n in 0..samples {
        let k = rng.gen_range(0..=4);
        let us: Vec<Rational> = (0..k).map(|_| q(&mut rng)).collect();
        let u = q(&mut rng);
        let r = rng.gen_range(0..=5);
        ensure(elementary_symmetric_shift_identity(&us, &u, r), || {
            format!("sample {n}: u={us:?}, u={u}, r={r}")
        })?;
    }
    Ok(format!("{samples} samples"))
}

// ---------------------------------------------------------------------------
// Blocks and dual Specht modules

/// Block idempotents exist, and the blocks have centers of dimension equal
/// to their fiber sizes, adding up to `|M_d(l)|`.
pub fn check_blocks(roots: &[Rational], d: usize) -> Result<String> {
    let h = algebra(roots, d);
    let blocks = block_center_dimensions(&h)?;
    let total: usize = blocks.iter().map(|b| b.center_dimension).sum();
    let m = enumerate_multipartitions(d, roots.len()).len();
    ensure(total == m, || format!("block centers add up to {total}, not {m}"))?;
    let dims: Vec<String> = blocks.iter().map(|b| b.center_dimension.to_string()).collect();
    Ok(format!("dims [{}]", dims.join(",")))
}

fn specht_dimension(lambda: &Multipartition) -> usize {
    // |S_d : S_{d_1} × ⋯| · Π f^{λ^{(r)}}
    let mut dim = 1usize;
    let mut placed = 0usize;
    for part in lambda.components() {
        for k in 1..=part.size() {
            dim = dim * (placed + k) / k;
        }
        placed += part.size();
        dim *= standard_tableaux(part).len();
    }
    dim
}

/// Every dual Specht module satisfies the relations of `H_d^q`, has the
/// expected dimension and central character, and is fixed by exactly its
/// own block idempotent.
pub fn check_dual_specht(roots: &[Rational], d: usize) -> Result<String> {
    let h = algebra(roots, d);
    let blocks = block_idempotents(&h)?;
    let mut count = 0;
    for lambda in enumerate_multipartitions(d, roots.len()) {
        let m = dual_specht(&lambda, roots)?;
        let ctx = |e: Error| Error::Verification(format!("{lambda}: {e}"));
        m.check_affine_relations().map_err(ctx)?;
        ensure(m.dim() == specht_dimension(&lambda), || format!("{lambda}: dimension {}", m.dim()))?;
        ensure(m.eval_at_x1(roots)?.is_zero(), || format!("f(x_1) does not vanish on {lambda}"))?;
        let cc = central_character(&m, roots).map_err(ctx)?;
        let res = residue_tuple(&lambda, roots)?;
        ensure(cc == res, || format!("{lambda}: central character {cc} but residues {res}"))?;
        check_block_action(&m, &blocks, &res).map_err(ctx)?;
        count += 1;
    }
    Ok(format!("{count} modules"))
}

fn check_block_action(m: &Representation, blocks: &[crate::blocks::BlockDescriptor], res: &ResidueMultiset) -> Result<()> {
    for b in blocks {
        let e = m.act(b.idempotent.as_ref().expect("computed"))?;
        if &b.residues == res {
            ensure(e.as_scalar() == Some(Rational::one()), || format!("b({}) is not the identity", b.residues))?;
        } else {
            ensure(e.is_zero(), || format!("b({}) does not vanish", b.residues))?;
        }
    }
    Ok(())
}

/// The central character of `M′∘M″` is the union of those of `M′` and `M″`.
pub fn check_concatenation(max_d: usize) -> Result<String> {
    let qs = [rat(0), rat(1), rat(-2)];
    let mut count = 0;
    for a in 1..max_d {
        for b in 1..=max_d - a {
            for l1 in enumerate_partitions(a) {
                for l2 in enumerate_partitions(b) {
                    for (q1, q2) in qs.iter().zip(qs.iter().cycle().skip(1)) {
                        let m1 = affinize(&dualize(&specht_representation(&l1)?)?, q1)?;
                        let m2 = affinize(&dualize(&specht_representation(&l2)?)?, q2)?;
                        let prod = induce_product(&m1, &m2)?;
                        prod.check_affine_relations()?;
                        let q = [q1.clone(), q2.clone()];
                        let cc = central_character(&prod, &q)?;
                        let parts = central_character(&m1, &q[..1])?.union(&central_character(&m2, &q[1..])?);
                        ensure(cc == parts, || format!("{l1}@{q1} o {l2}@{q2}: {cc} != {parts}"))?;
                        let lambda = Multipartition::new(vec![l1.clone(), l2.clone()]);
                        ensure(cc == residue_tuple(&lambda, &q)?, || format!("{lambda}: {cc}"))?;
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} products"))
}

/// The residue diagram of `(4,2,1)` at `q = 5`, both combinatorially and as
/// the central character of the module.
pub fn check_residue_example() -> Result<String> {
    let lambda = Multipartition::new(vec![Partition::new(vec![4, 2, 1])]);
    let want = ResidueMultiset::new([5, 6, 7, 8, 4, 5, 3].into_iter().map(rat).collect());
    let q = [rat(5)];
    ensure(residue_tuple(&lambda, &q)? == want, || "residue tuple of (4,2,1)".into())?;
    let cc = central_character(&dual_specht(&lambda, &q)?, &q)?;
    ensure(cc == want, || format!("central character {cc}"))?;
    Ok(want.to_string())
}

// ---------------------------------------------------------------------------
// Suites

/// One named check, tagged with the acceptance criterion it serves.
pub struct Check {
    pub criterion: u8,
    pub name: String,
    run: Box<dyn Fn() -> Result<String> + Send + Sync>,
}

impl Check {
    pub fn new(criterion: u8, name: impl Into<String>, run: impl Fn() -> Result<String> + Send + Sync + 'static) -> Self {
        Check { criterion, name: name.into(), run: Box::new(run) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub criterion: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Small,
    Full,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small" => Ok(Suite::Small),
            "full" => Ok(Suite::Full),
            _ => Err(Error::InvalidInput(format!("unknown suite {s:?}"))),
        }
    }
}

/// Runs the checks concurrently; results come back in input order, and a
/// panicking check counts as a failure.
pub fn run_checks(checks: &[Check]) -> Vec<CheckResult> {
    checks
        .par_iter()
        .map(|c| {
            let outcome = catch_unwind(AssertUnwindSafe(|| (c.run)()));
            let (passed, detail) = match outcome {
                Ok(Ok(detail)) => (true, detail),
                Ok(Err(e)) => (false, e.to_string()),
                Err(p) => {
                    let msg = p
                        .downcast_ref::<String>()
                        .cloned()
                        .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                        .unwrap_or_else(|| "panic".into());
                    (false, format!("panicked: {msg}"))
                }
            };
            CheckResult { criterion: c.criterion, name: c.name.clone(), passed, detail }
        })
        .collect()
}

fn center_grid(suite: Suite) -> Vec<(usize, usize)> {
    match suite {
        Suite::Small => vec![(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (1, 3), (2, 3)],
        Suite::Full => {
            let mut g: Vec<_> = (1..=4).flat_map(|d| [(d, 1), (d, 2)]).collect();
            g.extend((1..=3).map(|d| (d, 3)));
            g
        }
    }
}

/// The checks of a suite. `Full` is the acceptance grid; `Small` keeps
/// every kind of check at the smallest interesting sizes.
pub fn suite_checks(suite: Suite) -> Vec<Check> {
    let full = suite == Suite::Full;
    let mut checks = Vec::new();

    for (d, l) in center_grid(suite) {
        for roots in root_choices(l) {
            let tag = format!("d={d} roots={}", show(&roots));
            let r = roots.clone();
            checks.push(Check::new(1, format!("center {tag}"), move || check_center(&r, d)));
            if d <= 3 {
                let r = roots.clone();
                checks.push(Check::new(1, format!("gr of center {tag}"), move || check_gr_of_center(&r, d)));
            }
        }
    }
    let reg_d = if full { 3 } else { 2 };
    for l in 1..=2 {
        for d in 1..=reg_d {
            let r = root_choices(l).pop().expect("non-empty");
            checks.push(Check::new(1, format!("regular representation d={d} roots={}", show(&r)), move || {
                check_regular_representation(&r, d)
            }));
        }
    }

    let mut graded: Vec<(usize, usize)> = (1..=3).flat_map(|d| (1..=3).map(move |l| (d, l))).collect();
    if full {
        graded.push((4, 2));
    } else {
        graded.retain(|&(d, l)| d * l <= 6);
    }
    for &(d, l) in &graded {
        checks.push(Check::new(2, format!("centralizer d={d} l={l}"), move || check_centralizer(d, l)));
    }

    let cyc_d = if full { 4 } else { 3 };
    for d in 1..=cyc_d {
        for l in 1..=3 {
            checks.push(Check::new(3, format!("cycle products d={d} l={l}"), move || check_cycle_products(d, l)));
        }
    }
    checks.push(Check::new(3, "worked examples", check_worked_examples));

    for d in 1..=3 {
        for l in 1..=3 {
            if full || d * l <= 6 {
                checks.push(Check::new(4, format!("graded center bases d={d} l={l}"), move || {
                    check_graded_center_bases(d, l)
                }));
            }
        }
    }

    for d in 1..=if full { 5 } else { 4 } {
        checks.push(Check::new(5, format!("Jucys-Murphy d={d}"), move || check_murphy(d)));
    }

    let block_d = if full { 3 } else { 2 };
    for l in 1..=2 {
        let mut choices = root_choices(l);
        if l > 1 {
            choices.push(generic_roots(l));
        }
        for roots in choices {
            for d in 1..=block_d {
                let tag = format!("d={d} roots={}", show(&roots));
                let r = roots.clone();
                checks.push(Check::new(6, format!("block centers {tag}"), move || check_blocks(&r, d)));
                let r = roots.clone();
                checks.push(Check::new(7, format!("characters {tag}"), move || check_characters(&r, d)));
                let r = roots.clone();
                checks.push(Check::new(8, format!("dual Specht {tag}"), move || check_dual_specht(&r, d)));
            }
        }
    }
    checks.push(Check::new(6, "block example d=2 roots=(0,0)", || {
        let dims = check_blocks(&[rat(0), rat(0)], 2)?;
        ensure(dims == "dims [2,2,1]", || dims.clone())?;
        Ok(dims)
    }));
    checks.push(Check::new(6, "generic blocks are singletons", move || {
        for d in 1..=block_d {
            let h = algebra(&generic_roots(2), d);
            let blocks = block_center_dimensions(&h)?;
            ensure(blocks.iter().all(|b| b.center_dimension == 1), || format!("d={d}"))?;
            ensure(blocks.len() == enumerate_multipartitions(d, 2).len(), || format!("d={d}"))?;
        }
        Ok("all singleton".into())
    }));
    checks.push(Check::new(8, "residues of (4,2,1) at q=5", check_residue_example));
    checks.push(Check::new(8, "concatenation of central characters", move || check_concatenation(block_d)));

    for d in 1..=3 {
        for l in 1..=2 {
            checks.push(Check::new(9, format!("graded generation d={d} l={l}"), move || {
                check_graded_generation(d, l)
            }));
            for roots in root_choices(l) {
                checks.push(Check::new(9, format!("power sums d={d} roots={}", show(&roots)), move || {
                    check_power_sums(&roots, d)
                }));
            }
        }
    }

    let lem_d = if full { 4 } else { 3 };
    for l in 1..=3 {
        checks.push(Check::new(10, format!("h products d={lem_d} l={l}"), move || check_h_products(lem_d, l)));
        checks.push(Check::new(10, format!("JM powers d=3 l={l}"), move || check_jm_powers(3, l, 3)));
        for roots in root_choices(l) {
            checks.push(Check::new(10, format!("leading terms of powers roots={}", show(&roots)), move || {
                check_power_leading_terms(&roots, 3, 3)
            }));
        }
    }
    checks.push(Check::new(10, "elementary symmetric shift identity", || check_shift_identity(2024, 200)));
    checks
}

/// Full character matrix of the blocks has rank equal to their number, so
/// every central character of `H_d^q` is some `χ(i_λ)`.
pub fn check_characters(roots: &[Rational], d: usize) -> Result<String> {
    let h = algebra(roots, d);
    let blocks = crate::blocks::enumerate_blocks(d, roots)?;
    let chars = crate::blocks::character_matrix(&blocks, d, roots.len());
    let rank = crate::linalg::rank(&chars);
    ensure(rank == blocks.len(), || format!("character matrix has rank {rank} < {}", blocks.len()))?;
    // Idempotents cut the center into pieces that exhaust it.
    let cut = block_center_dimensions(&h)?;
    let total: usize = cut.iter().map(|b| b.center_dimension).sum();
    let dim = center_commutant(&h).len();
    ensure(total == dim, || format!("blocks cover {total} of {dim} center dimensions"))?;
    Ok(format!("{} characters", blocks.len()))
}

/// Aggregated results with a pass flag per criterion.
#[derive(Debug, Clone)]
pub struct Report {
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    /// `(criterion, passed, checks)` for every criterion present.
    pub fn by_criterion(&self) -> Vec<(u8, bool, usize)> {
        let mut out: Vec<(u8, bool, usize)> = Vec::new();
        for r in &self.results {
            match out.iter_mut().find(|(c, _, _)| *c == r.criterion) {
                Some(entry) => {
                    entry.1 &= r.passed;
                    entry.2 += 1;
                }
                None => out.push((r.criterion, r.passed, 1)),
            }
        }
        out.sort_by_key(|e| e.0);
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "criteria": self.by_criterion().iter().map(|(c, p, n)| json!({"criterion": c, "passed": p, "checks": n})).collect::<Vec<_>>(),
            "failures": self.results.iter().filter(|r| !r.passed).map(|r| json!({
                "criterion": r.criterion, "name": r.name, "detail": r.detail,
            })).collect::<Vec<_>>(),
            "checks": self.results.len(),
        })
    }
}

pub fn run_suite(suite: Suite) -> Report {
    Report { results: run_checks(&suite_checks(suite)) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_choices_are_distinct() {
        assert_eq!(root_choices(1).len(), 3);
        assert_eq!(root_choices(3), vec![
            vec![rat(0), rat(0), rat(0)],
            vec![rat(3), rat(3), rat(3)],
            vec![rat(0), rat(1), rat(2)],
            vec![rat(0), rat(0), rat(2)],
        ]);
    }

    #[test]
    fn failures_are_reported() {
        let checks = vec![
            Check::new(1, "ok", || Ok("fine".into())),
            Check::new(2, "err", || fail("broken")),
            Check::new(2, "panic", || panic!("boom")),
        ];
        let report = Report { results: run_checks(&checks) };
        assert!(!report.passed());
        assert_eq!(report.by_criterion(), vec![(1, true, 1), (2, false, 2)]);
        assert!(report.results[2].detail.contains("boom"));
    }

    #[test]
    fn quick_structural_checks() {
        check_worked_examples().unwrap();
        check_h_products(3, 2).unwrap();
        check_jm_powers(3, 2, 3).unwrap();
        check_power_leading_terms(&[rat(1), rat(-1)], 2, 3).unwrap();
        check_shift_identity(7, 50).unwrap();
        check_residue_example().unwrap();
        check_concatenation(3).unwrap();
    }
}
