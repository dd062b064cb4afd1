//! Colored cycles `A^{(r)} = h_r(A)·A` and the bases of the graded center
//! built from them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::{h_poly, GradedElement};
use crate::combinatorics::{distinct_rearrangements, Multipartition, Partition};
use crate::rational::rat;
use crate::symgroup::{all_permutations, Cycle};
use crate::{Error, Rational, Result};

/// A cycle of color `r`, standing for `h_r(A)·A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredCycle {
    cycle: Cycle,
    color: usize,
}

impl ColoredCycle {
    /// Rejects colors `≥ l`, for which the element vanishes.
    pub fn new(cycle: Cycle, color: usize, l: usize) -> Result<Self> {
        if color >= l {
            return Err(Error::InvalidInput(format!("color {color} >= level {l}")));
        }
        Ok(ColoredCycle { cycle, color })
    }

    pub fn cycle(&self) -> &Cycle {
        &self.cycle
    }

    pub fn color(&self) -> usize {
        self.color
    }

    /// 1-cycles of color 0 are the identity.
    pub fn is_trivial(&self) -> bool {
        self.cycle.len() == 1 && self.color == 0
    }

    pub fn element(&self, d: usize, l: usize) -> GradedElement {
        let h = h_poly(d, l, self.color, &self.cycle.support());
        h.multiply(&GradedElement::perm(l, self.cycle.to_permutation(d)))
            .expect("same algebra")
    }
}

impl fmt::Display for ColoredCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^({})", self.cycle, self.color)
    }
}

/// Drops color-0 1-cycles and sorts by minimal support element.
fn normalize(mut cycles: Vec<ColoredCycle>) -> Vec<ColoredCycle> {
    cycles.retain(|c| !c.is_trivial());
    cycles.sort_by_key(|c| Cycle::min(&c.cycle));
    cycles
}

/// Result of multiplying two colored cycles: zero, or `scalar` times a
/// product of disjoint colored cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleProduct {
    Zero,
    Scaled { scalar: u64, cycles: Vec<ColoredCycle> },
}

impl CycleProduct {
    pub fn to_element(&self, d: usize, l: usize) -> GradedElement {
        match self {
            CycleProduct::Zero => GradedElement::zero(d, l),
            CycleProduct::Scaled { scalar, cycles } => {
                product_element(cycles, d, l).scale(&rat(*scalar as i64))
            }
        }
    }
}

impl fmt::Display for CycleProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleProduct::Zero => write!(f, "0"),
            CycleProduct::Scaled { scalar, cycles } => {
                if *scalar != 1 {
                    write!(f, "{scalar}*")?;
                }
                if cycles.is_empty() {
                    return write!(f, "1");
                }
                for c in cycles {
                    write!(f, "{c}")?;
                }
                Ok(())
            }
        }
    }
}

/// Closed form for `A^{(r)} B^{(s)}` by the size `c = |A ∩ B|`:
/// disjoint cycles commute; for `c = 1` the product is `(AB)^{(r+s)}`; for
/// `c ≥ 2` it is `δ_{r+s,0} l^{c−1} h_{(c−1)(l−1)}(A∪B)·AB`, written as
/// `l^{c−1}` times the cycles of `AB` on `A∪B`, all of color `l−1`.
pub fn colored_cycle_product(a: &ColoredCycle, b: &ColoredCycle, l: usize) -> CycleProduct {
    let sa = a.cycle.support();
    let sb = b.cycle.support();
    let c = sa.iter().filter(|x| sb.contains(x)).count();
    if c == 0 {
        return CycleProduct::Scaled { scalar: 1, cycles: normalize(vec![a.clone(), b.clone()]) };
    }
    let n = *sa.iter().chain(&sb).max().unwrap();
    let ab = a.cycle.to_permutation(n).compose_unchecked(&b.cycle.to_permutation(n));
    let mut union: Vec<usize> = sa.iter().chain(&sb).copied().collect();
    union.sort_unstable();
    union.dedup();
    let pieces: Vec<Cycle> = ab
        .cycle_decomposition()
        .into_iter()
        .filter(|cy| union.contains(&cy.min()))
        .collect();
    if c == 1 {
        let color = a.color + b.color;
        if color >= l {
            return CycleProduct::Zero;
        }
        let joined = pieces.into_iter().max_by_key(Cycle::len).expect("non-empty union");
        return CycleProduct::Scaled {
            scalar: 1,
            cycles: normalize(vec![ColoredCycle { cycle: joined, color }]),
        };
    }
    let color = (c - 1) * (l - 1);
    if a.color + b.color != 0 || color >= l {
        return CycleProduct::Zero;
    }
    debug_assert_eq!(color, l - 1);
    CycleProduct::Scaled {
        scalar: (l as u64).pow((c - 1) as u32),
        cycles: normalize(pieces.into_iter().map(|cycle| ColoredCycle { cycle, color: l - 1 }).collect()),
    }
}

/// The element `A_1^{(r_1)} ⋯ A_m^{(r_m)}` of a list of colored cycles
/// (not required to be disjoint).
pub fn product_element(cycles: &[ColoredCycle], d: usize, l: usize) -> GradedElement {
    cycles.iter().fold(GradedElement::one(d, l), |acc, c| {
        acc.multiply(&c.element(d, l)).expect("same algebra")
    })
}

/// Cycle type of a product of disjoint colored cycles: `λ^{(r)}` collects
/// the lengths of cycles of color `r−1`, uncovered points counting as
/// color-0 1-cycles.
pub fn cycle_type(cycles: &[ColoredCycle], d: usize, l: usize) -> Multipartition {
    let mut parts = vec![Vec::new(); l];
    let mut covered = 0;
    for c in cycles {
        parts[c.color].push(c.cycle.len());
        covered += c.cycle.len();
    }
    parts[0].extend(std::iter::repeat_n(1, d - covered));
    Multipartition::new(parts.into_iter().map(Partition::new).collect())
}

/// Every product of disjoint colored cycles in `Q_d`, normalized, grouped
/// by underlying permutation in lexicographic order.
pub fn enumerate_disjoint_products(d: usize, l: usize) -> Vec<Vec<ColoredCycle>> {
    let mut out = Vec::new();
    for w in all_permutations(d) {
        let cycles = w.cycle_decomposition();
        let m = cycles.len();
        let mut colors = vec![0usize; m];
        loop {
            out.push(normalize(
                cycles
                    .iter()
                    .zip(&colors)
                    .map(|(c, &r)| ColoredCycle { cycle: c.clone(), color: r })
                    .collect(),
            ));
            let Some(pos) = (0..m).rev().find(|&i| colors[i] + 1 < l) else {
                break;
            };
            colors[pos] += 1;
            for c in colors.iter_mut().skip(pos + 1) {
                *c = 0;
            }
        }
    }
    out
}

/// `z_d(λ)`: the sum of all products of disjoint colored cycles of type `λ`.
pub fn class_sum(lambda: &Multipartition) -> GradedElement {
    let (d, l) = (lambda.size(), lambda.level());
    let mut out = GradedElement::zero(d, l);
    for prod in enumerate_disjoint_products(d, l) {
        if &cycle_type(&prod, d, l) == lambda {
            out = &out + &product_element(&prod, d, l);
        }
    }
    out
}

/// `y_i(k) = Σ (i_1 ⋯ i_{a−1} i)^{(r)}` over distinct `i_1..i_{a−1} < i`,
/// where `k = (a−1)l + r`.
pub fn y_element(d: usize, l: usize, i: usize, k: usize) -> GradedElement {
    assert!(i >= 1 && i <= d, "index {i} outside 1..={d}");
    let (a, r) = (k / l + 1, k % l);
    let mut out = GradedElement::zero(d, l);
    if a > i {
        return out;
    }
    let mut tuple = Vec::with_capacity(a);
    fn rec(
        len: usize,
        i: usize,
        r: usize,
        d: usize,
        l: usize,
        tuple: &mut Vec<usize>,
        out: &mut GradedElement,
    ) {
        if tuple.len() == len {
            let mut pts = tuple.clone();
            pts.push(i);
            let cycle = ColoredCycle { cycle: Cycle::new(pts).unwrap(), color: r };
            *out = &*out + &cycle.element(d, l);
            return;
        }
        for j in 1..i {
            if !tuple.contains(&j) {
                tuple.push(j);
                rec(len, i, r, d, l, tuple, out);
                tuple.pop();
            }
        }
    }
    rec(a - 1, i, r, d, l, &mut tuple, &mut out);
    out
}

/// `m_d(μ) = Σ_{ν∼μ} y_1(ν_1) ⋯ y_d(ν_d)` over distinct rearrangements.
pub fn murphy_element(d: usize, l: usize, mu: &Partition) -> Result<GradedElement> {
    if !mu.in_p_set(d, l) {
        return Err(Error::NotInPSet(mu.to_string(), d, l));
    }
    let mut out = GradedElement::zero(d, l);
    for nu in distinct_rearrangements(&mu.padded(d)) {
        let term = nu.iter().enumerate().fold(GradedElement::one(d, l), |acc, (idx, &k)| {
            acc.multiply(&y_element(d, l, idx + 1, k)).expect("same algebra")
        });
        out = &out + &term;
    }
    Ok(out)
}

/// Writes an element of `Q_d` as a combination of products of disjoint
/// colored cycles. Fails if the element is not in `Q_d`.
pub fn decompose_disjoint(elem: &GradedElement) -> Result<Vec<(Vec<ColoredCycle>, Rational)>> {
    let (d, l) = (elem.d(), elem.l());
    let mut found: BTreeMap<Vec<ColoredCycle>, Rational> = BTreeMap::new();
    for (key, c) in elem.terms().iter() {
        let mut cycles = Vec::new();
        for cy in key.perm.cycle_decomposition() {
            let deg: usize = cy.points().iter().map(|&p| key.exps[p - 1] as usize).sum();
            let base = (cy.len() - 1) * (l - 1);
            if deg < base || deg - base >= l {
                return Err(Error::Verification(format!(
                    "term {key:?} is not part of a colored-cycle product"
                )));
            }
            cycles.push(ColoredCycle { cycle: cy, color: deg - base });
        }
        found.entry(normalize(cycles)).or_insert_with(|| c.clone());
    }
    let decomposition: Vec<_> = found.into_iter().collect();
    let rebuilt = decomposition.iter().fold(GradedElement::zero(d, l), |acc, (cy, c)| {
        &acc + &product_element(cy, d, l).scale(c)
    });
    if &rebuilt != elem {
        return Err(Error::Verification("element is not in the centralizer Q_d".into()));
    }
    Ok(decomposition)
}

/// Coordinates of a central element in the basis `{z_d(λ)}`.
pub fn expand_in_class_sums(elem: &GradedElement) -> Result<BTreeMap<Multipartition, Rational>> {
    let (d, l) = (elem.d(), elem.l());
    let mut coeffs = BTreeMap::new();
    for (cycles, c) in decompose_disjoint(elem)? {
        coeffs.entry(cycle_type(&cycles, d, l)).or_insert(c);
    }
    let rebuilt = coeffs.iter().fold(GradedElement::zero(d, l), |acc, (lam, c)| {
        &acc + &class_sum(lam).scale(c)
    });
    if &rebuilt != elem {
        return Err(Error::Verification("element is not a combination of class sums".into()));
    }
    coeffs.retain(|_, c: &mut Rational| !c.is_zero());
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{basd_rank, enumerate_multipartitions, enumerate_p_set};
    use crate::symgroup::all_permutations;

    fn cc(pts: &[usize], color: usize, l: usize) -> ColoredCycle {
        ColoredCycle::new(Cycle::new(pts.to_vec()).unwrap(), color, l).unwrap()
    }

    #[test]
    fn worked_products() {
        let l = 6;
        let p = colored_cycle_product(&cc(&[1, 2, 3], 4, l), &cc(&[7, 9, 2], 1, l), l);
        assert_eq!(p, CycleProduct::Scaled { scalar: 1, cycles: vec![cc(&[1, 2, 7, 9, 3], 5, l)] });

        let p = colored_cycle_product(&cc(&[1, 2, 3], 4, l), &cc(&[7, 9, 2, 1], 1, l), l);
        assert_eq!(p, CycleProduct::Zero);

        for l in 2..=4 {
            let p = colored_cycle_product(&cc(&[1, 2, 3], 0, l), &cc(&[7, 9, 2, 1], 0, l), l);
            assert_eq!(
                p,
                CycleProduct::Scaled {
                    scalar: l as u64,
                    cycles: vec![cc(&[1, 7, 9, 3], l - 1, l), cc(&[2], l - 1, l)],
                }
            );
        }
    }

    #[test]
    fn color_bound_rejected() {
        assert!(ColoredCycle::new(Cycle::new(vec![1]).unwrap(), 2, 2).is_err());
    }

    #[test]
    fn one_cycles_are_powers() {
        let (d, l) = (3, 3);
        for r in 0..l {
            let e = cc(&[2], r, l).element(d, l);
            let mut ex = vec![0; d];
            ex[1] = r as u32;
            assert_eq!(e, GradedElement::monomial(d, l, &ex));
        }
        assert_eq!(cc(&[3], 0, l).element(d, l), GradedElement::one(d, l));
        let t = cc(&[1, 2], 0, 2).element(2, 2);
        assert_eq!(t.render(), "x1*s1 + x2*s1");
    }

    #[test]
    fn disjoint_product_count() {
        for d in 0..=4 {
            for l in 1..=3 {
                assert_eq!(
                    enumerate_disjoint_products(d, l).len() as u64,
                    basd_rank(d, l).unwrap()
                );
            }
        }
    }

    #[test]
    fn class_sums() {
        for d in 1..=3 {
            for l in 1..=2 {
                let mut comps = vec![Partition::empty(); l];
                comps[0] = Partition::new(vec![1; d]);
                assert_eq!(class_sum(&Multipartition::new(comps)), GradedElement::one(d, l));
            }
        }
        let z = class_sum(&"()|(2)".parse().unwrap());
        let expected = GradedElement::monomial(2, 2, &[1, 1])
            .multiply(&GradedElement::s(2, 2, 1))
            .unwrap();
        assert_eq!(z, expected);
    }

    #[test]
    fn class_sums_at_level_one_are_conjugacy_class_sums() {
        for d in 1..=4 {
            for lam in enumerate_multipartitions(d, 1) {
                let mut direct = GradedElement::zero(d, 1);
                for w in all_permutations(d) {
                    let mut lens: Vec<usize> = w.cycle_decomposition().iter().map(Cycle::len).collect();
                    lens.sort_unstable_by(|a, b| b.cmp(a));
                    if lens == lam.components()[0].parts() {
                        direct = &direct + &GradedElement::perm(1, w);
                    }
                }
                assert_eq!(class_sum(&lam), direct);
            }
        }
    }

    #[test]
    fn y_examples() {
        let (d, l) = (3, 3);
        for i in 1..=d {
            for r in 0..l {
                let mut ex = vec![0; d];
                ex[i - 1] = r as u32;
                assert_eq!(y_element(d, l, i, r), GradedElement::monomial(d, l, &ex));
            }
            assert!(y_element(d, l, i, i * l).is_zero());
        }
        assert_eq!(y_element(d, l, 2, l), cc(&[1, 2], 0, l).element(d, l));
    }

    #[test]
    fn murphy_examples() {
        for l in 1..=3 {
            assert_eq!(murphy_element(2, l, &Partition::empty()).unwrap(), GradedElement::one(2, l));
            for r in 0..l {
                let m = murphy_element(1, l, &Partition::new(vec![r])).unwrap();
                assert_eq!(m, GradedElement::monomial(1, l, &[r as u32]));
            }
        }
        assert!(murphy_element(2, 2, &Partition::new(vec![4])).is_err());
    }

    #[test]
    fn murphy_elements_central() {
        for d in 1..=3 {
            for l in 1..=3 {
                for mu in enumerate_p_set(d, l) {
                    assert!(murphy_element(d, l, &mu).unwrap().is_central(), "d={d} l={l} mu={mu}");
                }
            }
        }
    }

    #[test]
    fn decomposition_round_trip() {
        let (d, l) = (3, 2);
        let z = class_sum(&"(1)|(2)".parse().unwrap());
        let parts = decompose_disjoint(&z).unwrap();
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|(_, c)| *c == rat(1)));
        let coeffs = expand_in_class_sums(&z).unwrap();
        assert_eq!(coeffs.len(), 1);
        assert!(decompose_disjoint(&GradedElement::s(d, l, 1)).is_err());
    }
}
