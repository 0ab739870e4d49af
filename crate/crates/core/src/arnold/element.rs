//! Elements of the configuration-space cohomology ring in normal form,
//! with straightening, multiplication, and the relabelling action of the
//! symmetric group.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::symgrp::classfn::rational_str;
use crate::symgrp::Permutation;

use super::monomial::{Generator, NbcMonomial};

/// An element of the ring for n points, homogeneous of a fixed degree,
/// stored as an exact linear combination of normal-form monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    n: u32,
    degree: u32,
    terms: BTreeMap<NbcMonomial, BigRational>,
}

impl AlgebraElement {
    pub fn zero(n: u32, degree: u32) -> Self {
        AlgebraElement {
            n,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The unit element 1 (degree 0).
    pub fn one(n: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(NbcMonomial::unit(), BigRational::from(BigInt::from(1)));
        AlgebraElement { n, degree: 0, terms }
    }

    /// A single generator `w(i,j)` as a degree-1 element.
    pub fn generator(n: u32, i: u32, j: u32) -> Self {
        let g = Generator::new(i, j);
        assert!(g.b() <= n, "generator {g} needs at least {} points", g.b());
        let mut terms = BTreeMap::new();
        terms.insert(
            NbcMonomial::new(vec![g]),
            BigRational::from(BigInt::from(1)),
        );
        AlgebraElement { n, degree: 1, terms }
    }

    /// Wraps an already-normal monomial as an element.
    pub fn from_monomial(n: u32, m: NbcMonomial) -> Self {
        let degree = m.degree() as u32;
        if let Some(last) = m.factors().last() {
            assert!(last.b() <= n, "monomial {m} needs at least {} points", last.b());
        }
        let mut terms = BTreeMap::new();
        terms.insert(m, BigRational::from(BigInt::from(1)));
        AlgebraElement { n, degree, terms }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NbcMonomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &NbcMonomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, m: NbcMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.n, other.n, "point-count mismatch in add");
        assert_eq!(self.degree, other.degree, "degree mismatch in add");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero(self.n, self.degree);
        }
        AlgebraElement {
            n: self.n,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.scale(&BigRational::from(BigInt::from(-1))))
    }

    /// Product of two elements (straightened onto the normal-form basis).
    pub fn mul(&self, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.n, other.n, "point-count mismatch in mul");
        let mut out = AlgebraElement::zero(self.n, self.degree + other.degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut word: Vec<Generator> =
                    Vec::with_capacity(ma.degree() + mb.degree());
                word.extend_from_slice(ma.factors());
                word.extend_from_slice(mb.factors());
                let straightened = straighten(self.n, &word);
                out = out.add(&straightened.scale(&(ca * cb)));
            }
        }
        out
    }

    /// The relabelling action of `sigma`: each generator `w(a,b)` maps to
    /// `w(sigma(a), sigma(b))` and the result is re-straightened.
    pub fn act(&self, sigma: &Permutation) -> AlgebraElement {
        assert_eq!(
            sigma.degree(),
            self.n,
            "permutation degree must equal the point count"
        );
        let mut out = AlgebraElement::zero(self.n, self.degree);
        for (m, c) in &self.terms {
            let word: Vec<Generator> =
                m.factors().iter().map(|g| g.relabel(sigma)).collect();
            let straightened = straighten(self.n, &word);
            out = out.add(&straightened.scale(c));
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    /// Canonical rendering: terms in increasing monomial order, each as
    /// `<sign><coefficient> <monomial>`, joined by single spaces;
    /// the zero element prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            let body = rational_str(c);
            if body.starts_with('-') {
                write!(f, "{body} {m}")?;
            } else {
                write!(f, "+{body} {m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement(n={}, deg={}, {})", self.n, self.degree, self)
    }
}

/// Straightens an arbitrary word of generators into normal form.
///
/// Words with a repeated generator vanish. Otherwise the word is sorted
/// (with the sign of the sorting permutation) and any two factors sharing
/// a second index are eliminated through the three-term relation
/// `w(a1,b) w(a2,b) = w(a1,a2) w(a2,b) - w(a1,a2) w(a1,b)` for `a1 < a2 < b`,
/// which strictly decreases the multiset of second indices; the rewriting
/// therefore terminates, and it lands exactly on the normal-form basis.
pub fn straighten(n: u32, word: &[Generator]) -> AlgebraElement {
    let mut out = AlgebraElement::zero(n, word.len() as u32);
    for (mono, c) in straighten_raw(word) {
        out.add_term(mono, BigRational::from(BigInt::from(c)));
    }
    out
}

pub(crate) fn straighten_raw(word: &[Generator]) -> BTreeMap<NbcMonomial, i64> {
    let mut out: BTreeMap<NbcMonomial, i64> = BTreeMap::new();
    let mut stack: Vec<(Vec<Generator>, i64)> = vec![(word.to_vec(), 1)];
    while let Some((mut w, mut coeff)) = stack.pop() {
        if !presort(&mut w, &mut coeff) {
            continue;
        }
        match first_shared_b(&w) {
            None => {
                *out.entry(NbcMonomial::new(w)).or_insert(0) += coeff;
            }
            Some(j) => {
                push_rewrites(&w, j, coeff, &mut stack);
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Sorts the word, multiplying `coeff` by the sign of the sorting
/// permutation; returns false when a factor repeats (the word vanishes).
fn presort(w: &mut [Generator], coeff: &mut i64) -> bool {
    // Insertion sort with inversion count: words are short (degree <= ~6).
    let mut inversions = 0usize;
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            w.swap(j - 1, j);
            inversions += 1;
            j -= 1;
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return false;
    }
    if inversions % 2 == 1 {
        *coeff = -*coeff;
    }
    true
}

/// Index of the first factor sharing its second index with the next one,
/// in a sorted duplicate-free word.
fn first_shared_b(w: &[Generator]) -> Option<usize> {
    w.windows(2).position(|p| p[0].b() == p[1].b())
}

/// Applies the three-term relation at position `j` of a sorted word:
/// factors `w(a1,b) w(a2,b)` (with `a1 < a2`) are replaced by
/// `w(a1,a2) w(a2,b)` and `- w(a1,a2) w(a1,b)`.
fn push_rewrites(w: &[Generator], j: usize, coeff: i64, stack: &mut Vec<(Vec<Generator>, i64)>) {
    let (g1, g2) = (w[j], w[j + 1]);
    debug_assert_eq!(g1.b(), g2.b());
    debug_assert!(g1.a() < g2.a());
    let bridge = Generator::new(g1.a(), g2.a());
    let mut first = w.to_vec();
    first[j] = bridge;
    // first[j+1] stays g2.
    let mut second = w.to_vec();
    second[j] = bridge;
    second[j + 1] = g1;
    stack.push((first, coeff));
    stack.push((second, -coeff));
}

/// The coefficient of `target` in the straightening of `word`: the diagonal
/// matrix entry needed for traces, computed without materializing the other
/// terms. Pruning: every rewrite strictly decreases the sorted multiset of
/// second indices, so branches whose multiset drops below the target's are
/// discarded.
pub(crate) fn diagonal_coefficient(word: &[Generator], target: &NbcMonomial) -> i64 {
    let mut target_bs: Vec<u32> = target.factors().iter().map(Generator::b).collect();
    target_bs.sort_unstable_by(|x, y| y.cmp(x));
    let mut total = 0i64;
    let mut stack: Vec<(Vec<Generator>, i64)> = vec![(word.to_vec(), 1)];
    let mut bs_buf: Vec<u32> = Vec::with_capacity(word.len());
    while let Some((mut w, mut coeff)) = stack.pop() {
        if !presort(&mut w, &mut coeff) {
            continue;
        }
        bs_buf.clear();
        bs_buf.extend(w.iter().rev().map(Generator::b));
        if bs_buf < target_bs {
            continue;
        }
        match first_shared_b(&w) {
            None => {
                if w == target.factors() {
                    total += coeff;
                }
            }
            Some(j) => push_rewrites(&w, j, coeff, &mut stack),
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arnold::monomial::basis;

    fn g(a: u32, b: u32) -> Generator {
        Generator::new(a, b)
    }

    #[test]
    fn straighten_reproduces_three_term_relation() {
        // w(1,3) w(2,3) = w(1,2) w(2,3) - w(1,2) w(1,3).
        let lhs = straighten(3, &[g(1, 3), g(2, 3)]);
        assert_eq!(
            lhs.to_string(),
            "-1 w(1,2)w(1,3) +1 w(1,2)w(2,3)"
        );
        // Anticommutativity with sign: w(1,3) w(1,2) = -w(1,2) w(1,3).
        let swapped = straighten(3, &[g(1, 3), g(1, 2)]);
        assert_eq!(swapped.to_string(), "-1 w(1,2)w(1,3)");
        // Square of a generator vanishes.
        assert!(straighten(3, &[g(1, 2), g(1, 2)]).is_zero());
    }

    #[test]
    fn straighten_fixes_normal_forms() {
        for n in 2..=6u32 {
            for i in 0..=n {
                for m in basis(n, i) {
                    let s = straighten(n, m.factors());
                    assert_eq!(s, AlgebraElement::from_monomial(n, m.clone()), "{m}");
                }
            }
        }
    }

    #[test]
    fn three_term_relation_holds_after_straightening() {
        // w(i,j)w(j,k) + w(j,k)w(i,k) + w(i,k)w(i,j) = 0 for all triples.
        let n = 5;
        for i in 1..=n {
            for j in (i + 1)..=n {
                for k in (j + 1)..=n {
                    let wij = AlgebraElement::generator(n, i, j);
                    let wjk = AlgebraElement::generator(n, j, k);
                    let wik = AlgebraElement::generator(n, i, k);
                    let total = wij
                        .mul(&wjk)
                        .add(&wjk.mul(&wik))
                        .add(&wik.mul(&wij));
                    assert!(total.is_zero(), "triple ({i},{j},{k})");
                }
            }
        }
    }

    #[test]
    fn action_is_a_ring_homomorphism_and_composes() {
        use itertools::Itertools;
        let n = 4;
        let perms: Vec<Permutation> = (1..=n)
            .permutations(n as usize)
            .map(Permutation::from_images)
            .collect();
        let x = AlgebraElement::generator(n, 1, 2).mul(&AlgebraElement::generator(n, 2, 3));
        let y = AlgebraElement::generator(n, 1, 4);
        for s in &perms {
            // Homomorphism: sigma(x*y) = sigma(x) * sigma(y).
            assert_eq!(x.mul(&y).act(s), x.act(s).mul(&y.act(s)));
            for t in &perms {
                // Composition: (s∘t)·x = s·(t·x).
                assert_eq!(x.act(&s.compose(t)), x.act(t).act(s));
            }
        }
    }

    #[test]
    fn diagonal_coefficient_matches_full_straightening() {
        use itertools::Itertools;
        let n = 5;
        let b2 = basis(n, 2);
        let all_gens: Vec<Generator> = (1..=n)
            .tuple_combinations()
            .map(|(a, b)| g(a, b))
            .collect();
        for w in all_gens.iter().copied().permutations(2) {
            let full = straighten(n, &w);
            for target in &b2 {
                let expected = full.coefficient(target);
                let got = BigRational::from(BigInt::from(diagonal_coefficient(&w, target)));
                assert_eq!(expected, got, "word {w:?} target {target}");
            }
        }
    }

    #[test]
    fn multiplication_is_associative_on_samples() {
        let n = 5;
        let x = AlgebraElement::generator(n, 1, 3);
        let y = AlgebraElement::generator(n, 3, 5).add(&AlgebraElement::generator(n, 2, 4));
        let z = AlgebraElement::generator(n, 2, 5);
        assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        // Anticommutativity of odd-degree elements: x*y = -y*x.
        assert_eq!(x.mul(&y), y.mul(&x).scale(&BigRational::from(BigInt::from(-1))));
    }
}
