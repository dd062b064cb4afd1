//! Permutations of `{1..d}` and cycles.
//!
//! Products are read right to left: `(v ∘ w)(i) = v(w(i))`. With this
//! convention `(1 2 3)(7 9 2 1) = (1 7 9 3)` in `S_9`.

use std::fmt;

use crate::{Error, Result};

/// A permutation in one-line notation, `images[i-1] = w(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation { images: (1..=d as u8).collect() }
    }

    /// From one-line notation `(w(1), …, w(d))`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d + 1];
        for &x in &images {
            if x == 0 || x > d || seen[x] {
                return Err(Error::InvalidInput(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|x| x as u8).collect() })
    }

    /// The simple transposition `s_i = (i i+1)` in `S_d`.
    pub fn simple(i: usize, d: usize) -> Self {
        assert!(i >= 1 && i < d, "s_{i} not in S_{d}");
        let mut p = Permutation::identity(d);
        p.images.swap(i - 1, i);
        p
    }

    pub fn transposition(i: usize, j: usize, d: usize) -> Self {
        let mut p = Permutation::identity(d);
        p.images.swap(i - 1, j - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `w(i)` for `1 ≤ i ≤ d`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x as usize == k + 1)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x as usize - 1] = (k + 1) as u8;
        }
        Permutation { images: inv }
    }

    /// Number of inversions, i.e. the Coxeter length.
    pub fn inversions(&self) -> usize {
        let n = self.degree();
        (0..n)
            .map(|i| (i + 1..n).filter(|&j| self.images[i] > self.images[j]).count())
            .sum()
    }

    /// `self ∘ s_i`, which swaps positions `i` and `i+1` of the one-line form.
    pub fn times_simple(&self, i: usize) -> Permutation {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    /// `s_i ∘ self`, which swaps the values `i` and `i+1`.
    pub fn simple_times(&self, i: usize) -> Permutation {
        let (a, b) = (i as u8, (i + 1) as u8);
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| if x == a { b } else if x == b { a } else { x })
                .collect(),
        }
    }

    /// Indices `i_1, …, i_k` with `w = s_{i_1} ⋯ s_{i_k}` and `k` the
    /// inversion count.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut found = Vec::new();
        // Peel right descents: w = (w s_i) s_i with w s_i one inversion shorter.
        while let Some(i) = (1..w.degree()).find(|&i| w.images[i - 1] > w.images[i]) {
            found.push(i);
            w = w.times_simple(i);
        }
        found.reverse();
        found
    }

    pub fn from_word(word: &[usize], d: usize) -> Permutation {
        word.iter()
            .fold(Permutation::identity(d), |acc, &i| acc.times_simple(i))
    }

    /// Disjoint cycles covering `{1..d}`, 1-cycles included, sorted by
    /// their minimal element.
    pub fn cycle_decomposition(&self) -> Vec<Cycle> {
        let d = self.degree();
        let mut seen = vec![false; d + 1];
        let mut out = Vec::new();
        for start in 1..=d {
            if seen[start] {
                continue;
            }
            let mut pts = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                pts.push(x as u8);
                x = self.apply(x);
            }
            out.push(Cycle { points: pts });
        }
        out
    }

    pub fn from_cycles(d: usize, cycles: &[Cycle]) -> Result<Permutation> {
        let mut p = Permutation::identity(d);
        for c in cycles {
            if c.points.iter().any(|&x| x as usize > d) {
                return Err(Error::InvalidInput(format!("cycle {c} not in S_{d}")));
            }
            p = c.to_permutation(d).compose_unchecked(&p);
        }
        Ok(p)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without 1-cycles; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycle_decomposition().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// All of `S_d` in lexicographic order of one-line notation.
pub fn all_permutations(d: usize) -> Vec<Permutation> {
    let mut cur: Vec<u8> = (1..=d as u8).collect();
    let mut out = vec![Permutation { images: cur.clone() }];
    loop {
        let n = cur.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(Permutation { images: cur.clone() });
    }
    out
}

/// Minimal-length representatives of the left cosets `w (S_{d'} × S_{d''})`
/// in `S_{d'+d''}`. A representative is increasing on `{1..d'}` and on
/// `{d'+1..d}`; they are listed by the lexicographic order of `u({1..d'})`.
pub fn coset_representatives(d_prime: usize, d_double_prime: usize) -> Vec<Permutation> {
    let d = d_prime + d_double_prime;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(d_prime);
    fn rec(start: usize, d: usize, k: usize, chosen: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if chosen.len() == k {
            let rest = (1..=d).filter(|x| !chosen.contains(x));
            let images: Vec<usize> = chosen.iter().copied().chain(rest).collect();
            out.push(Permutation::from_images(images).unwrap());
            return;
        }
        for x in start..=d {
            chosen.push(x);
            rec(x + 1, d, k, chosen, out);
            chosen.pop();
        }
    }
    rec(1, d, d_prime, &mut chosen, &mut out);
    out
}

/// Splits `w = u ∘ y` with `u` a minimal left coset representative and
/// `y ∈ S_{d'} × S_{d''}`.
pub fn parabolic_factor(w: &Permutation, d_prime: usize) -> (Permutation, Permutation) {
    let d = w.degree();
    let mut first: Vec<usize> = (1..=d_prime).map(|i| w.apply(i)).collect();
    first.sort_unstable();
    let rest = (1..=d).filter(|x| !first.contains(x));
    let images: Vec<usize> = first.iter().copied().chain(rest).collect();
    let u = Permutation::from_images(images).unwrap();
    let y = u.inverse().compose_unchecked(w);
    (u, y)
}

/// A cycle `(i_1 i_2 … i_a)`, normalized so that its minimal point is first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    points: Vec<u8>,
}

impl Cycle {
    pub fn new(points: Vec<usize>) -> Result<Cycle> {
        if points.is_empty() {
            return Err(Error::InvalidInput("empty cycle".into()));
        }
        let mut sorted = points.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) || sorted[0] == 0 {
            return Err(Error::InvalidInput(format!("invalid cycle points {points:?}")));
        }
        let pos = points.iter().position(|&x| x == sorted[0]).unwrap();
        let mut pts: Vec<u8> = points.iter().map(|&x| x as u8).collect();
        pts.rotate_left(pos);
        Ok(Cycle { points: pts })
    }

    pub fn points(&self) -> Vec<usize> {
        self.points.iter().map(|&x| x as usize).collect()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn min(&self) -> usize {
        self.points[0] as usize
    }

    pub fn contains(&self, i: usize) -> bool {
        self.points.contains(&(i as u8))
    }

    /// The support as a sorted list.
    pub fn support(&self) -> Vec<usize> {
        let mut s = self.points();
        s.sort_unstable();
        s
    }

    pub fn to_permutation(&self, d: usize) -> Permutation {
        let mut p = Permutation::identity(d);
        let n = self.points.len();
        for k in 0..n {
            p.images[self.points[k] as usize - 1] = self.points[(k + 1) % n];
        }
        p
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.points.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{seq::SliceRandom, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cyc(v: &[usize]) -> Cycle {
        Cycle::new(v.to_vec()).unwrap()
    }

    fn random_perm(d: usize, rng: &mut ChaCha8Rng) -> Permutation {
        let mut v: Vec<usize> = (1..=d).collect();
        v.shuffle(rng);
        Permutation::from_images(v).unwrap()
    }

    #[test]
    fn composition_convention() {
        let a = cyc(&[1, 2, 3]).to_permutation(9);
        let b = cyc(&[7, 9, 2, 1]).to_permutation(9);
        let ab = a.compose(&b).unwrap();
        let cycles: Vec<_> = ab.cycle_decomposition().into_iter().filter(|c| c.len() > 1).collect();
        assert_eq!(cycles, vec![cyc(&[1, 7, 9, 3])]);
        assert_eq!(ab.apply(2), 2);
        assert_eq!(ab.to_string(), "(1 7 9 3)");
    }

    #[test]
    fn compose_identity_and_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let d = 1 + (rand::Rng::gen_range(&mut rng, 0..8));
            let w = random_perm(d, &mut rng);
            assert_eq!(Permutation::identity(d).compose(&w).unwrap(), w);
            assert!(w.compose(&w.inverse()).unwrap().is_identity());
        }
        assert!(Permutation::identity(2).compose(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn compose_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let d = 1 + (rand::Rng::gen_range(&mut rng, 0..8));
            let (u, v, w) = (random_perm(d, &mut rng), random_perm(d, &mut rng), random_perm(d, &mut rng));
            assert_eq!(
                u.compose(&v).unwrap().compose(&w).unwrap(),
                u.compose(&v.compose(&w).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn cycles() {
        assert_eq!(
            Permutation::identity(3).cycle_decomposition(),
            vec![cyc(&[1]), cyc(&[2]), cyc(&[3])]
        );
        let w = cyc(&[1, 2, 7, 9, 3]).to_permutation(9);
        assert_eq!(
            w.cycle_decomposition(),
            vec![cyc(&[1, 2, 7, 9, 3]), cyc(&[4]), cyc(&[5]), cyc(&[6]), cyc(&[8])]
        );
        assert_eq!(cyc(&[3, 1, 2]), cyc(&[1, 2, 3]));
        assert_ne!(cyc(&[1, 3, 2]), cyc(&[1, 2, 3]));
        assert!(Cycle::new(vec![1, 1]).is_err());
        for w in all_permutations(4) {
            assert_eq!(Permutation::from_cycles(4, &w.cycle_decomposition()).unwrap(), w);
        }
    }

    #[test]
    fn reduced_words() {
        assert!(Permutation::identity(4).reduced_word().is_empty());
        let t = Permutation::transposition(1, 3, 3);
        assert_eq!(t.reduced_word().len(), 3);
        assert_eq!(Permutation::from_word(&t.reduced_word(), 3), t);
        for w in all_permutations(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.inversions());
            assert_eq!(Permutation::from_word(&word, 4), w);
        }
    }

    #[test]
    fn cosets() {
        assert_eq!(coset_representatives(3, 0), vec![Permutation::identity(3)]);
        assert_eq!(
            coset_representatives(1, 1),
            vec![Permutation::identity(2), Permutation::simple(1, 2)]
        );
        let binom = |n: usize, k: usize| (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
        for d in 0..=6 {
            for dp in 0..=d {
                assert_eq!(coset_representatives(dp, d - dp).len(), binom(d, dp));
            }
        }
    }

    #[test]
    fn cosets_minimal_and_distinct() {
        for d in 1..=5 {
            for dp in 0..=d {
                let reps = coset_representatives(dp, d - dp);
                let in_parabolic = |y: &Permutation| (1..=dp).all(|i| y.apply(i) <= dp);
                for w in all_permutations(d) {
                    let hits: Vec<_> = reps
                        .iter()
                        .filter(|u| in_parabolic(&u.inverse().compose(&w).unwrap()))
                        .collect();
                    assert_eq!(hits.len(), 1);
                    assert!(hits[0].inversions() <= w.inversions());
                    let (u, y) = parabolic_factor(&w, dp);
                    assert_eq!(&u, hits[0]);
                    assert!(in_parabolic(&y));
                    assert_eq!(u.compose(&y).unwrap(), w);
                }
            }
        }
    }
}
