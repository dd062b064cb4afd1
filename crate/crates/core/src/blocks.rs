//! Blocks of `H_d^q`: central characters, block idempotents and the
//! dimensions of the block centers.
//!
//! The central characters are the classes of residue multisets of
//! multipartitions. Idempotents are found by interpolating the characters
//! on the basis `{p_d(μ)}` of the center and then lifting the (possibly
//! non-idempotent) solution with `e ↦ 3e² − 2e³`.

use serde_json::{json, Value};

use crate::combinatorics::{
    enumerate_multipartitions, enumerate_p_set, monomial_symmetric_eval, residue_tuple, Multipartition,
    Partition, ResidueMultiset,
};
use crate::hecke::{center_commutant, p_element, HeckeAlgebra, HeckeElement};
use crate::linalg::{rank, solve, RationalMatrix};
use crate::pbw::{rank_of, KeyIndex};
use crate::rational::rat;
use crate::{Error, Result};

/// One block: its residue class, the multipartitions whose dual Specht
/// modules lie in it, and (when computed) its idempotent.
#[derive(Debug, Clone)]
pub struct BlockDescriptor {
    pub residues: ResidueMultiset,
    pub fiber: Vec<Multipartition>,
    pub idempotent: Option<HeckeElement>,
    pub center_dimension: usize,
}

impl BlockDescriptor {
    pub fn to_json(&self) -> Value {
        let mut obj = json!({
            "residues": self.residues.entries().iter().map(crate::rational_to_string).collect::<Vec<_>>(),
            "fiber": self.fiber.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "center_dim": self.center_dimension,
        });
        if let Some(b) = &self.idempotent {
            obj["idempotent_terms"] = b.terms().to_json();
        }
        obj
    }
}

fn roots_of(h: &HeckeAlgebra) -> Result<Vec<crate::Rational>> {
    h.spec()
        .roots()
        .map(<[_]>::to_vec)
        .ok_or_else(|| Error::InvalidInput("blocks need the roots of f".into()))
}

/// Residue classes of all multipartitions, in order of first appearance.
pub fn enumerate_blocks(d: usize, roots: &[crate::Rational]) -> Result<Vec<BlockDescriptor>> {
    let mut blocks: Vec<BlockDescriptor> = Vec::new();
    for lambda in enumerate_multipartitions(d, roots.len()) {
        let res = residue_tuple(&lambda, roots)?;
        match blocks.iter_mut().find(|b| b.residues == res) {
            Some(b) => {
                b.fiber.push(lambda);
                b.center_dimension += 1;
            }
            None => blocks.push(BlockDescriptor {
                residues: res,
                fiber: vec![lambda],
                idempotent: None,
                center_dimension: 1,
            }),
        }
    }
    Ok(blocks)
}

/// `χ(i)(p_d(μ))`: the monomial symmetric polynomial at the entries of `i`.
pub fn chi_evaluate(i: &ResidueMultiset, mu: &Partition) -> crate::Rational {
    monomial_symmetric_eval(mu, i.entries())
}

/// Characters of the blocks restricted to `{p_d(μ) : μ ∈ P_d(l)}`.
pub fn character_matrix(blocks: &[BlockDescriptor], d: usize, l: usize) -> RationalMatrix {
    let ps = enumerate_p_set(d, l);
    let mut m = RationalMatrix::zeros(blocks.len(), ps.len());
    for (j, b) in blocks.iter().enumerate() {
        for (k, mu) in ps.iter().enumerate() {
            m[(j, k)] = chi_evaluate(&b.residues, mu);
        }
    }
    m
}

fn lift_idempotent(h: &HeckeAlgebra, mut e: HeckeElement) -> Result<HeckeElement> {
    // The defect e² − e is nilpotent, and its nilpotency order at least
    // halves each round, so this stops after about log2(dim) steps.
    for _ in 0..64 {
        let e2 = h.multiply(&e, &e)?;
        if e2 == e {
            return Ok(e);
        }
        let e3 = h.multiply(&e2, &e)?;
        e = &e2.scale(&rat(3)) - &e3.scale(&rat(2));
    }
    Err(Error::Verification("idempotent lifting did not converge".into()))
}

/// All blocks with their idempotents `b(i)`, checked to be orthogonal
/// central idempotents summing to one.
pub fn block_idempotents(h: &HeckeAlgebra) -> Result<Vec<BlockDescriptor>> {
    let roots = roots_of(h)?;
    let (d, l) = (h.d(), h.l());
    let mut blocks = enumerate_blocks(d, &roots)?;
    let chars = character_matrix(&blocks, d, l);
    if rank(&chars) != blocks.len() {
        return Err(Error::Singular);
    }
    let ps = enumerate_p_set(d, l)
        .iter()
        .map(|mu| p_element(h, mu))
        .collect::<Result<Vec<_>>>()?;
    for j in 0..blocks.len() {
        let mut target = vec![rat(0); blocks.len()];
        target[j] = rat(1);
        let coeffs = solve(&chars, &target)?.ok_or(Error::Singular)?;
        let mut b = h.zero();
        for (c, p) in coeffs.iter().zip(&ps) {
            b = &b + &p.scale(c);
        }
        blocks[j].idempotent = Some(lift_idempotent(h, b)?);
    }

    let fail = |what: String| Err(Error::Verification(what));
    let mut sum = h.zero();
    for (j, bj) in blocks.iter().enumerate() {
        let e = bj.idempotent.as_ref().expect("just computed");
        if !h.is_central(e)? {
            return fail(format!("idempotent of block {} is not central", bj.residues));
        }
        for bk in &blocks[j + 1..] {
            if !h.multiply(e, bk.idempotent.as_ref().expect("just computed"))?.is_zero() {
                return fail(format!("idempotents of {} and {} are not orthogonal", bj.residues, bk.residues));
            }
        }
        sum = &sum + e;
    }
    if sum != h.one() {
        return fail("block idempotents do not sum to 1".into());
    }
    Ok(blocks)
}

/// Blocks with `center_dimension = dim b(i)·Z`, computed from the
/// brute-force center and checked against the fiber sizes.
pub fn block_center_dimensions(h: &HeckeAlgebra) -> Result<Vec<BlockDescriptor>> {
    let mut blocks = block_idempotents(h)?;
    let center = center_commutant(h);
    let index = KeyIndex::new(h.d(), h.l());
    for b in blocks.iter_mut() {
        let e = b.idempotent.as_ref().expect("computed above");
        let cut = center
            .iter()
            .map(|z| h.multiply(e, z).map(|p| p.terms().clone()))
            .collect::<Result<Vec<_>>>()?;
        let dim = rank_of(&index, &cut);
        if dim != b.fiber.len() {
            return Err(Error::Verification(format!(
                "block {} has center of dimension {dim} but {} multipartitions",
                b.residues,
                b.fiber.len()
            )));
        }
        b.center_dimension = dim;
    }
    Ok(blocks)
}
