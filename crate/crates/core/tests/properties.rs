use num_bigint::BigInt;
use proptest::prelude::*;

use cyclohecke::combinatorics::{elementary_symmetric_shift_identity, residue_tuple, Multipartition, Partition};
use cyclohecke::hecke::{CyclotomicSpec, HeckeAlgebra, HeckeElement};
use cyclohecke::pbw::PbwKey;
use cyclohecke::symgroup::all_permutations;
use cyclohecke::Rational;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn algebra(roots: &[i64], d: usize) -> HeckeAlgebra {
    HeckeAlgebra::new(CyclotomicSpec::from_roots(roots.iter().map(|&r| q(r, 1)).collect(), d).unwrap())
}

type Terms = Vec<(Vec<u32>, usize, i64)>;

fn terms(d: usize, l: u32) -> impl Strategy<Value = Terms> {
    let perms = (1..=d).product::<usize>();
    prop::collection::vec((prop::collection::vec(0..l, d), 0..perms, -3i64..=3), 0..4)
}

fn element(h: &HeckeAlgebra, t: &Terms) -> HeckeElement {
    let perms = all_permutations(h.d());
    let mut e = h.zero();
    for (exps, w, c) in t {
        e = &e + &h.from_key(PbwKey::new(exps.clone(), perms[*w].clone()), q(*c, 1));
    }
    e
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative(a in terms(3, 2), b in terms(3, 2), c in terms(3, 2)) {
        let h = algebra(&[0, 1], 3);
        let (a, b, c) = (element(&h, &a), element(&h, &b), element(&h, &c));
        let left = h.multiply(&h.multiply(&a, &b).unwrap(), &c).unwrap();
        let right = h.multiply(&a, &h.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_is_distributive(a in terms(3, 2), b in terms(3, 2), c in terms(3, 2)) {
        let h = algebra(&[2, 2], 3);
        let (a, b, c) = (element(&h, &a), element(&h, &b), element(&h, &c));
        let lhs = h.multiply(&a, &(&b + &c)).unwrap();
        let rhs = &h.multiply(&a, &b).unwrap() + &h.multiply(&a, &c).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn shift_identity(us in prop::collection::vec((-9i64..=9, 1i64..=5), 0..5), u in (-9i64..=9, 1i64..=5), r in 0usize..6) {
        let us: Vec<Rational> = us.into_iter().map(|(n, d)| q(n, d)).collect();
        prop_assert!(elementary_symmetric_shift_identity(&us, &q(u.0, u.1), r));
    }

    #[test]
    fn residues_shift_with_the_roots(
        a in prop::collection::vec(1usize..4, 0..3),
        b in prop::collection::vec(1usize..4, 0..3),
        roots in (-5i64..5, -5i64..5),
        t in -7i64..7,
    ) {
        let lambda = Multipartition::new(vec![Partition::new(a), Partition::new(b)]);
        let base = residue_tuple(&lambda, &[q(roots.0, 1), q(roots.1, 1)]).unwrap();
        let shifted = residue_tuple(&lambda, &[q(roots.0 + t, 1), q(roots.1 + t, 1)]).unwrap();
        let moved: Vec<Rational> = base.entries().iter().map(|e| e + q(t, 1)).collect();
        prop_assert_eq!(shifted.entries(), &moved[..]);
        prop_assert_eq!(base.len(), lambda.size());
    }
}
