//! Acceptance gate: ten end-to-end criteria covering identification,
//! character polynomials, oracle equivalence, splitting/restriction,
//! uniform stability, bounds, the transfer recursion, dimension
//! polynomiality, coinvariant stabilization, and the symmetric-group core.
//!
//! Each test prints one `[acceptance] criterion NN ...: PASS|FAIL` line
//! (visible with `--nocapture`) and enforces the runtime budget where one
//! applies. Everything is exact arithmetic: zero tolerance throughout.

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use repstab::arnold::{basis, character, quotient_oracle};
use repstab::charpoly::{fit, lagrange_eval, verify_rec_identity, CharacterPolynomial};
use repstab::fistab::{family_multiplicity_table, stability_degree_check, Family};
use repstab::moduli::{moduli_character, restriction_check, theta_subalgebra_oracle};
use repstab::symgrp::{
    classes, decompose, irreducible_character, partitions, ClassFunction, CycleType, Partition,
};

/// Runs one criterion, prints its verdict line, and enforces the runtime
/// budget when the criterion has one.
fn criterion(num: u32, label: &str, budget: Option<Duration>, body: impl FnOnce() + UnwindSafe) {
    let start = Instant::now();
    let outcome = catch_unwind(body);
    let elapsed = start.elapsed();
    let verdict = if outcome.is_ok() { "PASS" } else { "FAIL" };
    println!("[acceptance] criterion {num:02} ({label}): {verdict} ({elapsed:.2?})");
    if let Err(payload) = outcome {
        resume_unwind(payload);
    }
    if let Some(limit) = budget {
        assert!(
            elapsed < limit,
            "criterion {num:02} exceeded its runtime budget: {elapsed:.2?} >= {limit:?}"
        );
    }
}

fn int(x: u64) -> BigRational {
    BigRational::from(BigInt::from(x))
}

#[test]
fn criterion_01_h1_identification() {
    criterion(1, "degree-1 identification", Some(Duration::from_secs(5)), || {
        // The degree-1 moduli character must be exactly one copy of the
        // irreducible labeled (n-2, 2), for every n in 4..=10.
        for n in 4..=10u32 {
            let chi = moduli_character(n, 1).expect("degree-1 member exists");
            let dec = decompose(chi.class_function()).expect("genuine character");
            let expected = Partition::new(vec![n - 2, 2]);
            assert_eq!(dec.mult(&expected), 1, "n = {n}: missing the ({},2) copy", n - 2);
            assert_eq!(dec.constituent_count(), 1, "n = {n}: extra constituents in {dec}");
        }
    });
}

#[test]
fn criterion_02_character_polynomials() {
    criterion(2, "character polynomials", Some(Duration::from_secs(5)), || {
        // Fitting degree <= 2 polynomials on n in 4..=8 must give the two
        // closed forms exactly, and each must predict n = 9, 10 verbatim.
        for (family, formula) in [
            (Family::Moduli, "binom(X1,2) + X2 - X1"),
            (Family::ShiftedModuli, "binom(X1,2) + X2 - 1"),
        ] {
            let samples: Vec<ClassFunction> = (4..=8)
                .map(|n| family.character(n, 1).expect("degree-1 member"))
                .collect();
            let fitted = fit(&samples, 2).expect("samples admit a degree-2 fit");
            assert_eq!(fitted.nullity, 0, "{family}: fit must be unique");
            assert_eq!(fitted.poly.to_string(), formula, "{family}: wrong closed form");
            for n in 9..=10u32 {
                let predicted = fitted.poly.class_function(n);
                let actual = family.character(n, 1).expect("degree-1 member");
                assert_eq!(predicted, actual, "{family}: held-out prediction differs at n = {n}");
            }
        }
    });
}

#[test]
fn criterion_03_oracle_equivalence() {
    criterion(3, "oracle equivalence", Some(Duration::from_secs(60)), || {
        // The row-reduction oracle must agree with the normal-form basis
        // count and the straightening-trace character for every degree,
        // including degrees past vanishing.
        for n in 2..=6u32 {
            for i in 0..=n {
                let oracle = quotient_oracle(n, i).expect("within oracle budget");
                assert_eq!(
                    oracle.dimension,
                    basis(n, i).len() as u64,
                    "basis count differs from oracle at n = {n}, i = {i}"
                );
                assert_eq!(
                    oracle.character,
                    character(n, i),
                    "trace character differs from oracle at n = {n}, i = {i}"
                );
            }
        }
        // The subalgebra-span oracle must agree with the splitting-derived
        // shifted characters.
        for n in 2..=6u32 {
            for i in 0..=2u32 {
                let oracle = theta_subalgebra_oracle(n, i).expect("within oracle budget");
                let shifted = Family::ShiftedModuli
                    .character(n, i)
                    .expect("shifted member exists for n >= 2");
                assert_eq!(
                    oracle.character, shifted,
                    "subalgebra oracle differs at n = {n}, i = {i}"
                );
            }
        }
    });
}

#[test]
fn criterion_04_splitting_and_restriction() {
    criterion(4, "splitting and restriction", Some(Duration::from_secs(120)), || {
        // Configuration-space character = shifted family in degree i plus
        // shifted family in degree i-1, pointwise.
        for n in 2..=12u32 {
            for i in 0..=3u32.min(n) {
                let whole = character(n, i);
                let top = Family::ShiftedModuli.character(n, i).expect("shifted member");
                let sum = if i == 0 {
                    top
                } else {
                    &top + &Family::ShiftedModuli.character(n, i - 1).expect("shifted member")
                };
                assert_eq!(whole, sum, "splitting fails at n = {n}, i = {i}");
            }
        }
        // Restriction along forgetting the last point must match the
        // shifted family both as characters and through branching.
        for n in 3..=11u32 {
            for i in 0..=2u32 {
                restriction_check(n, i).expect("restriction consistency");
            }
        }
    });
}

#[test]
fn criterion_05_uniform_stability() {
    criterion(5, "uniform stability range", Some(Duration::from_secs(300)), || {
        // For i = 2 the multiplicity rows must be constant on every
        // sampled n >= 10, sampling through n = 13.
        let report = family_multiplicity_table(Family::Moduli, 2, 6..=13, 2)
            .expect("table over the sampled range");
        assert_eq!(report.range_bound, 10, "stable range must start at 10");
        assert_eq!(
            report.range_ok,
            Some(true),
            "rows must be constant for sampled n >= 10"
        );
        // The rows must carry actual entries at and past the range bound.
        for (label, row) in &report.rows {
            let past: Vec<_> = row.iter().skip((10 - report.n_min) as usize).collect();
            assert!(
                past.iter().all(|e| e.is_some()),
                "label {label} unrealizable past the range bound"
            );
        }
    });
}

#[test]
fn criterion_06_weight_length_alternating_bounds() {
    criterion(6, "weight/length/alternating bounds", None, || {
        // Every constituent must respect the weight bound |lambda| <= 2i+1,
        // the length bounds (padded parts <= 2i+1 for the plain family,
        // <= max(2i, 1) for the shifted family, whose degree-0 member is
        // the trivial representation with one padded part), and the
        // alternating representation must be absent for n > 2i + 2.
        for family in [Family::Moduli, Family::ShiftedModuli] {
            for i in 0..=2u32 {
                let lo = family.min_points().max(4);
                let hi = if i == 2 { 12 } else { 10 };
                for n in lo..=hi {
                    let chi = family.character(n, i).expect("member exists");
                    let dec = decompose(&chi).expect("genuine character");
                    for (padded, mult) in dec.iter() {
                        if mult == 0 {
                            continue;
                        }
                        let unpadded = padded.unpad();
                        assert!(
                            unpadded.size() <= 2 * i + 1,
                            "{family}, i = {i}, n = {n}: |{unpadded}| exceeds 2i+1"
                        );
                        assert!(
                            unpadded.size() <= family.weight_bound(i),
                            "{family}, i = {i}, n = {n}: weight bound violated by {unpadded}"
                        );
                        let max_len = match family {
                            Family::ShiftedModuli => (2 * i).max(1),
                            _ => 2 * i + 1,
                        };
                        assert!(
                            padded.parts().len() as u32 <= max_len,
                            "{family}, i = {i}, n = {n}: length of {padded} exceeds {max_len}"
                        );
                    }
                    if n > 2 * i + 2 {
                        let alternating = Partition::new(vec![1; n as usize]);
                        assert_eq!(
                            dec.mult(&alternating),
                            0,
                            "{family}, i = {i}, n = {n}: alternating constituent present"
                        );
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_07_recursion_identity() {
    criterion(7, "transfer recursion identity", None, || {
        // Fit Q0, P1/Q1, P2/Q2 on disjoint stable windows, then check
        // Q_i = P_i - (X1 - 1) * Q_{i-1} exactly, with deg Q_i <= 2i.
        let fit_family = |family: Family, i: u32, lo: u32, hi: u32, d: u32| -> CharacterPolynomial {
            let samples: Vec<ClassFunction> = (lo..=hi)
                .map(|n| family.character(n, i).expect("member exists"))
                .collect();
            let fitted = fit(&samples, d).expect("consistent fit");
            assert_eq!(fitted.nullity, 0, "{family} i = {i}: fit must be unique");
            fitted.poly
        };
        let q0 = fit_family(Family::Moduli, 0, 3, 6, 0);
        assert_eq!(q0.to_string(), "1", "degree-0 member is the trivial family");
        let p1 = fit_family(Family::ShiftedModuli, 1, 4, 8, 2);
        let q1 = fit_family(Family::Moduli, 1, 4, 8, 2);
        verify_rec_identity(1, &p1, &q1, &q0).expect("recursion at i = 1");
        let p2 = fit_family(Family::ShiftedModuli, 2, 10, 13, 4);
        let q2 = fit_family(Family::Moduli, 2, 10, 13, 4);
        verify_rec_identity(2, &p2, &q2, &q1).expect("recursion at i = 2");
        assert!(q1.degree() <= 2, "deg Q1 must be <= 2");
        assert!(q2.degree() <= 4, "deg Q2 must be <= 4");
    });
}

#[test]
fn criterion_08_poincare_polynomiality() {
    criterion(8, "dimension polynomiality", None, || {
        // dim of the degree-i moduli member must be a polynomial in n of
        // degree <= 2i: interpolate on 2i+1 points, check 2 held-out ones.
        let dim_at = |n: u32, i: u32| -> BigRational {
            Family::Moduli.character(n, i).expect("member exists").dim().clone()
        };
        for (i, fit_ns, held_ns) in [
            (1u32, vec![4u32, 5, 6], vec![7u32, 8]),
            (2, vec![6, 7, 8, 9, 10], vec![11, 12]),
        ] {
            assert_eq!(fit_ns.len() as u32, 2 * i + 1, "interpolation uses 2i+1 points");
            let points: Vec<(BigRational, BigRational)> = fit_ns
                .iter()
                .map(|&n| (int(n as u64), dim_at(n, i)))
                .collect();
            for &n in &held_ns {
                let predicted = lagrange_eval(&points, &int(n as u64));
                assert_eq!(
                    predicted,
                    dim_at(n, i),
                    "i = {i}: interpolated dimension differs at held-out n = {n}"
                );
            }
        }
    });
}

#[test]
fn criterion_09_coinvariant_stabilization() {
    criterion(9, "coinvariant stabilization", None, || {
        // For each a <= 2 the S_a-characters of coinvariants must agree on
        // all sampled n past the family's stability threshold: 4i + a for
        // the plain family, 2i + a for the shifted one.
        for family in [Family::Moduli, Family::ShiftedModuli] {
            for i in 0..=1u32 {
                let lo = family.min_points().max(3);
                let table = stability_degree_check(family, i, 2, lo..=9)
                    .expect("coinvariant table");
                assert_eq!(table.rows.len(), 3, "rows for a = 0, 1, 2");
                for row in &table.rows {
                    let expected_threshold = match family {
                        Family::ShiftedModuli => 2 * i + row.a,
                        _ => 4 * i + row.a,
                    };
                    assert_eq!(
                        row.threshold, expected_threshold,
                        "{family}, i = {i}, a = {}: wrong threshold", row.a
                    );
                    assert_eq!(
                        row.bound_ok,
                        Some(true),
                        "{family}, i = {i}, a = {}: characters differ past n = {}",
                        row.a,
                        row.threshold
                    );
                }
            }
        }
    });
}

#[test]
fn criterion_10_symmetric_group_core() {
    criterion(10, "symmetric-group core", None, || {
        for n in 1..=8u32 {
            let shapes = partitions(n);
            // First orthogonality: <chi_a, chi_b> = delta_{ab}.
            let chars: Vec<ClassFunction> =
                shapes.iter().map(irreducible_character).collect();
            for (a, x) in chars.iter().enumerate() {
                for (b, y) in chars.iter().enumerate() {
                    let expected = if a == b { BigRational::one() } else { BigRational::zero() };
                    assert_eq!(x.inner(y), expected, "orthonormality fails at n = {n}");
                }
            }
            // Sum of squared dimensions is n!.
            let mut total = BigRational::zero();
            for x in &chars {
                total += x.dim() * x.dim();
            }
            assert_eq!(
                total,
                BigRational::from(classes(n).group_order().clone()),
                "dimension identity fails at n = {n}"
            );
            // Branching: restriction of each irreducible decomposes into
            // one copy of each corner-removal shape.
            if n >= 2 {
                for lambda in &shapes {
                    let restricted = decompose(&irreducible_character(lambda).restrict())
                        .expect("restriction is genuine");
                    let expected = lambda.branch_restrict();
                    assert_eq!(
                        restricted.constituent_count(),
                        expected.len(),
                        "branching of {lambda} has wrong support"
                    );
                    for mu in &expected {
                        assert_eq!(restricted.mult(mu), 1, "branching {lambda} -> {mu}");
                    }
                }
            }
        }
        // Regular representation: each irreducible appears with
        // multiplicity equal to its dimension.
        for n in 1..=6u32 {
            let order = BigRational::from(classes(n).group_order().clone());
            let reg = ClassFunction::from_fn(n, |mu| {
                if mu == &CycleType::identity(n) {
                    order.clone()
                } else {
                    BigRational::zero()
                }
            });
            let dec = decompose(&reg).expect("regular representation is genuine");
            for lambda in &partitions(n) {
                let dim = irreducible_character(lambda).dim().clone();
                assert_eq!(
                    BigRational::from(BigInt::from(dec.mult(lambda))),
                    dim,
                    "regular representation at n = {n}: multiplicity of {lambda}"
                );
            }
        }
    });
}
