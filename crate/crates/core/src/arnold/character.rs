//! Characters of the symmetric-group action on each graded piece of the
//! configuration-space cohomology ring.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::symgrp::classfn::{classes, ClassFunction};
use crate::symgrp::Permutation;

use super::element::diagonal_coefficient;
use super::monomial::{basis, Generator};

static CHAR_CACHE: LazyLock<Mutex<HashMap<(u32, u32), ClassFunction>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The character of S_n acting on the degree-i graded piece (cached).
///
/// For each conjugacy class a representative permutation relabels every
/// normal-form basis monomial; the diagonal coefficient of the straightened
/// image contributes to the trace. The value at the identity always equals
/// the basis size.
pub fn character(n: u32, i: u32) -> ClassFunction {
    let mut cache = CHAR_CACHE.lock().unwrap();
    cache
        .entry((n, i))
        .or_insert_with(|| compute_character(n, i))
        .clone()
}

fn compute_character(n: u32, i: u32) -> ClassFunction {
    let mono_basis = basis(n, i);
    let data = classes(n);
    let values: Vec<BigRational> = data
        .types()
        .iter()
        .map(|mu| {
            let sigma = Permutation::representative(mu);
            let trace: i64 = mono_basis
                .par_iter()
                .map(|m| {
                    let word: Vec<Generator> =
                        m.factors().iter().map(|g| g.relabel(&sigma)).collect();
                    diagonal_coefficient(&word, m)
                })
                .sum();
            BigRational::from(BigInt::from(trace))
        })
        .collect();
    let chi = ClassFunction::from_values(n, values);
    assert_eq!(
        chi.dim(),
        &BigRational::from(BigInt::from(mono_basis.len() as i64)),
        "trace at the identity must equal the basis size at (n,i)=({n},{i})"
    );
    chi
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgrp::decompose::decompose;
    use crate::symgrp::partition::{CycleType, Partition};
    use num_traits::Zero;

    /// Degree-1 oracle: the trace on the span of the generators is the
    /// number of unordered pairs fixed by the permutation, i.e.
    /// `binom(m1, 2) + m2` in terms of cycle-type multiplicities.
    #[test]
    fn degree_one_character_counts_fixed_pairs() {
        for n in 2..=8u32 {
            let chi = character(n, 1);
            let data = classes(n);
            for mu in data.types() {
                let m1 = i64::from(mu.multiplicity(1));
                let m2 = i64::from(mu.multiplicity(2));
                let expected = m1 * (m1 - 1) / 2 + m2;
                assert_eq!(
                    chi.value(mu),
                    &BigRational::from(BigInt::from(expected)),
                    "(n,mu)=({n},{mu})"
                );
            }
        }
    }

    /// Whole-ring oracle: the total dimension over all degrees is
    /// `prod(1 + k) for k = 1..n-1 = n!`.
    #[test]
    fn total_dimension_is_n_factorial() {
        use crate::symgrp::classfn::factorial;
        for n in 1..=7u32 {
            let mut total = BigRational::zero();
            for i in 0..=n {
                total += character(n, i).dim();
            }
            assert_eq!(
                total,
                BigRational::from(factorial(n)),
                "sum of graded dims at n={n}"
            );
        }
    }

    #[test]
    fn characters_are_genuine_and_match_frozen_decompositions() {
        // Degree 1 at n = 4 decomposes as V(4) + V(3,1) + V(2,2).
        let dec = decompose(&character(4, 1)).expect("genuine");
        let expected: Vec<(Partition, u64)> = vec![
            (Partition::new(vec![4]), 1),
            (Partition::new(vec![3, 1]), 1),
            (Partition::new(vec![2, 2]), 1),
        ];
        assert_eq!(
            dec.iter().map(|(l, m)| (l.clone(), m)).collect::<Vec<_>>(),
            expected
        );
        // All graded pieces at n <= 6 are genuine characters.
        for n in 2..=6u32 {
            for i in 0..=n {
                assert!(
                    decompose(&character(n, i)).is_ok(),
                    "(n,i)=({n},{i}) not genuine"
                );
            }
        }
    }

    #[test]
    fn top_degree_vanishing() {
        // The ring is zero in degrees >= n.
        for n in 2..=6u32 {
            assert!(character(n, n).is_zero());
            assert_eq!(
                character(n, n - 1).dim(),
                &BigRational::from(crate::symgrp::classfn::factorial(n - 1)),
                "top dim e_(n-1)(1..n-1) = (n-1)!"
            );
        }
    }

    #[test]
    fn frozen_character_values_small_cases() {
        // Degree 2 at n = 4 on classes (4),(3,1),(2,2),(2,1,1),(1^4):
        // hand-computed diagonal traces on the 11 basis monomials; the row
        // decomposes as 2*V(3,1) + V(2,2) + V(2,1,1) of total dimension 11.
        let chi = character(4, 2);
        let data = classes(4);
        let got: Vec<String> = (0..data.class_count())
            .map(|c| crate::symgrp::classfn::rational_str(chi.value_at(c)))
            .collect();
        assert_eq!(got, vec!["-1", "-1", "-1", "1", "11"]);
        let dec = decompose(&chi).expect("genuine");
        assert_eq!(dec.to_string(), "2*V(3,1) + V(2,2) + V(2,1,1)");
        // Transposition class value at (n,i)=(3,1): fixed pairs of a
        // transposition in S_3: the swapped pair only -> 1.
        let mu = CycleType::new(Partition::new(vec![2, 1]));
        assert_eq!(
            character(3, 1).value(&mu),
            &BigRational::from(BigInt::from(1))
        );
    }
}
