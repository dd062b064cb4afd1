//! The center of `H_d^f`: the symmetric elements `p_d(μ)` and brute-force
//! oracles to compare them against.

use crate::combinatorics::{distinct_rearrangements, enumerate_multipartitions, enumerate_p_set, Partition};
use crate::pbw::{commutant, same_span, saturate_subalgebra, KeyIndex, LinComb};
use crate::{Error, Result};

use super::{HeckeAlgebra, HeckeElement};

/// `p_d(μ) = Σ_{ν∼μ} x^ν`, summing each distinct rearrangement once.
pub fn p_element(h: &HeckeAlgebra, mu: &Partition) -> Result<HeckeElement> {
    if mu.length() > h.d() {
        return Err(Error::InvalidInput(format!(
            "partition {mu} has more than d={} parts",
            h.d()
        )));
    }
    let mut out = h.zero();
    for nu in distinct_rearrangements(&mu.padded(h.d())) {
        let exps: Vec<u32> = nu.iter().map(|&e| e as u32).collect();
        out = &out + &h.monomial(&exps);
    }
    Ok(out)
}

/// Nullspace of the stacked commutators with `x_1, s_1, …, s_{d−1}`.
pub fn center_commutant(h: &HeckeAlgebra) -> Vec<HeckeElement> {
    let index = KeyIndex::new(h.d(), h.l());
    let gens = h.generators();
    commutant(&index, gens.len(), |g, key| {
        let z = h.from_key(key.clone(), crate::rational::rat(1));
        h.commutator(&gens[g], &z).expect("same algebra").comb
    })
    .into_iter()
    .map(|c| h.wrap(c))
    .collect()
}

fn p_basis(h: &HeckeAlgebra) -> Result<Vec<HeckeElement>> {
    enumerate_p_set(h.d(), h.l()).iter().map(|mu| p_element(h, mu)).collect()
}

fn combs(elems: &[HeckeElement]) -> Vec<LinComb> {
    elems.iter().map(|e| e.comb.clone()).collect()
}

/// The brute-force center, checked to have dimension `|M_d(l)|` and to be
/// spanned by `{p_d(μ) : μ ∈ P_d(l)}`.
pub fn center_basis_bruteforce(h: &HeckeAlgebra) -> Result<Vec<HeckeElement>> {
    let basis = center_commutant(h);
    let expected = enumerate_multipartitions(h.d(), h.l()).len();
    if basis.len() != expected {
        return Err(Error::Verification(format!(
            "center has dimension {} but there are {expected} multipartitions",
            basis.len()
        )));
    }
    let index = KeyIndex::new(h.d(), h.l());
    let ps = p_basis(h)?;
    if !same_span(&index, &combs(&basis), &combs(&ps)) {
        return Err(Error::Verification(
            "the symmetric elements p_d(mu) do not span the center".into(),
        ));
    }
    Ok(basis)
}

/// Whether the power sums `p_d((r))`, `1 ≤ r ≤ d`, generate the center as a
/// unital algebra.
pub fn power_sum_generation_check(h: &HeckeAlgebra) -> Result<bool> {
    let index = KeyIndex::new(h.d(), h.l());
    let gens = (1..=h.d())
        .map(|r| p_element(h, &Partition::new(vec![r])).map(|e| e.comb))
        .collect::<Result<Vec<_>>>()?;
    let span = saturate_subalgebra(&index, &h.one().comb, &gens, |a, b| {
        h.multiply(&h.wrap(a.clone()), &h.wrap(b.clone())).expect("same algebra").comb
    });
    let center = center_commutant(h);
    Ok(span.rank() == center.len()
        && center.iter().all(|z| span.contains(&z.comb.to_vector(&index))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_partitions;
    use crate::hecke::CyclotomicSpec;
    use crate::rational::rat;
    use crate::symgroup::Permutation;

    fn alg(roots: &[i64], d: usize) -> HeckeAlgebra {
        HeckeAlgebra::new(CyclotomicSpec::from_roots(roots.iter().map(|&r| rat(r)).collect(), d).unwrap())
    }

    #[test]
    fn p_examples() {
        let h = alg(&[0], 3);
        assert_eq!(p_element(&h, &Partition::empty()).unwrap(), h.one());
        let mut transpositions = h.zero();
        for i in 1..=3 {
            for j in i + 1..=3 {
                transpositions = &transpositions + &h.perm(Permutation::transposition(i, j, 3));
            }
        }
        assert_eq!(p_element(&h, &Partition::new(vec![1])).unwrap(), transpositions);
        assert!(p_element(&h, &Partition::new(vec![1, 1, 1, 1])).is_err());
    }

    #[test]
    fn p_elements_are_central() {
        let h = alg(&[0, 2], 3);
        for mu in enumerate_p_set(3, 2) {
            assert!(h.is_central(&p_element(&h, &mu).unwrap()).unwrap(), "{mu}");
        }
    }

    #[test]
    fn small_centers() {
        assert_eq!(center_basis_bruteforce(&alg(&[0, 0], 2)).unwrap().len(), 5);
        assert_eq!(center_basis_bruteforce(&alg(&[1, 2], 2)).unwrap().len(), 5);
        for d in 1..=4 {
            let c = center_basis_bruteforce(&alg(&[0], d)).unwrap();
            assert_eq!(c.len(), enumerate_partitions(d).len());
        }
    }

    #[test]
    fn power_sums_generate() {
        assert!(power_sum_generation_check(&alg(&[0, 0], 1)).unwrap());
        assert!(power_sum_generation_check(&alg(&[0, 0], 2)).unwrap());
    }
}
