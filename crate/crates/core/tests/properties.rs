//! Randomized structural properties of the public API, exercised with
//! proptest. Each property is a mathematical identity that must hold for
//! every input, so shrunk counterexamples are directly meaningful.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use repstab::arnold::element::straighten;
use repstab::arnold::{basis, AlgebraElement};
use repstab::charpoly::{fit, CharacterPolynomial};
use repstab::symgrp::{
    decompose, irreducible_character, partitions, ClassFunction, Partition,
    Permutation,
};

/// Arbitrary permutation of S_n as a shuffled image vector.
fn permutation(n: u32) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(Permutation::from_images)
}

/// Arbitrary partition with parts bounded by `max_part` and at most
/// `max_len` parts (possibly empty).
fn partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    })
}

proptest! {
    #[test]
    fn partition_enumeration_is_canonical(n in 1u32..=10) {
        let all = partitions(n);
        // Known counts p(1)..p(10).
        let counts = [1usize, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        prop_assert_eq!(all.len(), counts[(n - 1) as usize]);
        prop_assert_eq!(all.first().unwrap().parts(), &[n][..]);
        let ones = vec![1u32; n as usize];
        prop_assert_eq!(all.last().unwrap().parts(), ones.as_slice());
        for w in all.windows(2) {
            prop_assert!(w[0] < w[1], "canonical order is strictly increasing");
        }
        for p in &all {
            prop_assert_eq!(p.size(), n);
            for pair in p.parts().windows(2) {
                prop_assert!(pair[0] >= pair[1]);
            }
        }
    }

    #[test]
    fn pad_and_unpad_are_inverse(lambda in partition(5, 4), extra in 0u32..=5) {
        let need = lambda.size() + lambda.first_part();
        // Below the threshold padding must fail, at or above it must
        // round-trip.
        if need > 0 {
            prop_assert!(lambda.pad(need - 1).is_err());
        }
        let n = need + extra;
        let padded = lambda.pad(n).unwrap();
        prop_assert_eq!(padded.size(), n);
        prop_assert_eq!(padded.unpad(), lambda);
    }

    #[test]
    fn conjugation_preserves_cycle_type(
        (sigma, tau) in (2u32..=6).prop_flat_map(|n| (permutation(n), permutation(n)))
    ) {
        let conj = tau.compose(&sigma).compose(&tau.inverse());
        prop_assert_eq!(conj.cycle_type(), sigma.cycle_type());
        let id = sigma.compose(&sigma.inverse());
        prop_assert_eq!(id, Permutation::identity(sigma.degree()));
    }

    #[test]
    fn normal_form_monomials_are_straightening_fixed_points(
        (n, pick) in (3u32..=6).prop_flat_map(|n| (Just(n), 0usize..200))
    ) {
        // Gather the full normal-form basis in every degree and check a
        // sampled monomial straightens to itself.
        let mut all = Vec::new();
        for i in 0..n {
            all.extend(basis(n, i));
        }
        let m = all[pick % all.len()].clone();
        let restraightened = straighten(n, m.factors());
        prop_assert_eq!(
            restraightened,
            AlgebraElement::from_monomial(n, m),
            "normal forms must be fixed by straightening"
        );
    }

    #[test]
    fn generator_products_anticommute(
        (a, b, c, d) in (1u32..=5, 1u32..=5, 1u32..=5, 1u32..=5)
    ) {
        prop_assume!(a != b && c != d);
        let n = 5;
        let g1 = AlgebraElement::generator(n, a, b);
        let g2 = AlgebraElement::generator(n, c, d);
        let minus_one = -BigRational::one();
        prop_assert_eq!(g1.mul(&g2), g2.mul(&g1).scale(&minus_one));
        prop_assert!(g1.mul(&g1).terms().next().is_none(), "squares vanish");
    }

    #[test]
    fn group_action_is_a_homomorphism_on_elements(
        (n, sigma, tau, pick) in (3u32..=5)
            .prop_flat_map(|n| (Just(n), permutation(n), permutation(n), 0usize..100))
    ) {
        let deg2 = basis(n, 2.min(n - 1));
        prop_assume!(!deg2.is_empty());
        let m = deg2[pick % deg2.len()].clone();
        let elem = AlgebraElement::from_monomial(n, m);
        let composed = elem.act(&sigma.compose(&tau));
        let stepwise = elem.act(&tau).act(&sigma);
        prop_assert_eq!(composed, stepwise);
    }

    #[test]
    fn decompose_recovers_planted_multiplicities(
        (n, mults) in (2u32..=5).prop_flat_map(|n| {
            let count = partitions(n).len();
            (Just(n), proptest::collection::vec(0u64..=3, count))
        })
    ) {
        let shapes = partitions(n);
        let mut chi = ClassFunction::zero(n);
        for (lambda, m) in shapes.iter().zip(&mults) {
            if *m > 0 {
                let scaled = irreducible_character(lambda)
                    .scale_by(|_| BigRational::from(BigInt::from(*m)));
                chi = &chi + &scaled;
            }
        }
        let dec = decompose(&chi).expect("planted characters are genuine");
        for (lambda, m) in shapes.iter().zip(&mults) {
            prop_assert_eq!(dec.mult(lambda), *m);
        }
    }

    #[test]
    fn fitted_polynomials_reproduce_their_samples(
        coeffs in proptest::collection::vec(-3i64..=3, 4)
    ) {
        // Plant a polynomial c0 + c1 X1 + c2 binom(X1,2) + c3 X2, sample
        // it on all classes of n = 3..6, and fit with the same degree
        // bound: the fit must be consistent and reproduce every sample.
        let mut planted = CharacterPolynomial::zero();
        let monos: [Vec<u32>; 4] = [vec![], vec![1], vec![2], vec![0, 1]];
        for (e, c) in monos.iter().zip(&coeffs) {
            planted = planted.add(&CharacterPolynomial::binomial_monomial(
                e.clone(),
                BigRational::from(BigInt::from(*c)),
            ));
        }
        let samples: Vec<ClassFunction> =
            (3..=6).map(|n| planted.class_function(n)).collect();
        let fitted = fit(&samples, 2).expect("planted samples are consistent");
        for chi in &samples {
            prop_assert_eq!(fitted.poly.class_function(chi.n()), chi.clone());
        }
        if fitted.nullity == 0 {
            prop_assert_eq!(fitted.poly, planted);
        }
    }

    #[test]
    fn coinvariants_interchange_with_direct_sum(
        (n, a) in (3u32..=6).prop_flat_map(|n| (Just(n), 0u32..=2))
    ) {
        // Averaging is linear: coinvariants of a sum are the sum of
        // coinvariants.
        use repstab::fistab::coinvariant_character;
        let x = irreducible_character(&Partition::new(vec![n - 1, 1]));
        let y = ClassFunction::trivial(n);
        let lhs = coinvariant_character(&(&x + &y), a);
        let rhs = &coinvariant_character(&x, a) + &coinvariant_character(&y, a);
        prop_assert_eq!(lhs, rhs);
    }
}
