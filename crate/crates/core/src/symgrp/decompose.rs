//! Decomposition of class functions into irreducible characters.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use super::character::{character_table, irreducible_character};
use super::classfn::{classes, rational_str, ClassFunction};
use super::partition::Partition;

/// A decomposition of a genuine character of S_n into irreducibles:
/// a finite multiset of partitions of n with positive multiplicities.
#[derive(Clone, PartialEq, Eq)]
pub struct IrrDecomposition {
    n: u32,
    mults: BTreeMap<Partition, u64>,
}

impl IrrDecomposition {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Multiplicity of the irreducible indexed by `lambda` (0 if absent).
    pub fn mult(&self, lambda: &Partition) -> u64 {
        self.mults.get(lambda).copied().unwrap_or(0)
    }

    /// Constituents with their multiplicities, in canonical partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.mults.iter().map(|(l, &m)| (l, m))
    }

    pub fn constituent_count(&self) -> usize {
        self.mults.len()
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    /// Total dimension of the decomposed character.
    pub fn dim(&self) -> BigInt {
        let table = character_table(self.n);
        let mut total = BigInt::zero();
        for (lambda, m) in &self.mults {
            let idx = table
                .shapes()
                .iter()
                .position(|s| s == lambda)
                .expect("constituent indexes a partition of n");
            total += table.dim(idx) * BigInt::from(*m);
        }
        total
    }

    /// The decomposition of the restriction to S_{n-1}, computed by the
    /// branching rule (each constituent contributes one copy of every
    /// corner-removed shape).
    pub fn restrict_branch(&self) -> IrrDecomposition {
        assert!(self.n > 0, "cannot restrict a decomposition at n = 0");
        let mut mults: BTreeMap<Partition, u64> = BTreeMap::new();
        for (lambda, m) in &self.mults {
            for smaller in lambda.branch_restrict() {
                *mults.entry(smaller).or_insert(0) += m;
            }
        }
        IrrDecomposition {
            n: self.n - 1,
            mults,
        }
    }

    /// The class function `sum of mult * chi^lambda`.
    pub fn character(&self) -> ClassFunction {
        let mut acc = ClassFunction::zero(self.n);
        for (lambda, m) in &self.mults {
            let chi = irreducible_character(lambda);
            let scaled = chi.scale_by(|_| BigRational::from(BigInt::from(*m)));
            acc = &acc + &scaled;
        }
        acc
    }
}

impl fmt::Display for IrrDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mults.is_empty() {
            return write!(f, "0");
        }
        for (k, (lambda, m)) in self.mults.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if *m == 1 {
                write!(f, "V{lambda}")?;
            } else {
                write!(f, "{m}*V{lambda}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IrrDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Failure modes of [`decompose`]: the input was not a genuine character.
#[derive(Debug, Clone, Error)]
pub enum DecomposeError {
    #[error(
        "not a genuine character of S_{n}: multiplicity of V{lambda} is {}",
        rational_str(multiplicity)
    )]
    BadMultiplicity {
        n: u32,
        lambda: Partition,
        multiplicity: BigRational,
    },
    #[error("class function on S_{n} is not in the span of the irreducible characters")]
    NotInCharacterSpan { n: u32 },
}

/// Decomposes a class function into irreducible characters.
///
/// Every inner product with an irreducible must be a nonnegative integer
/// and the constituents must reconstruct the input exactly; otherwise the
/// input was not a genuine character and an error identifying the offending
/// multiplicity is returned.
pub fn decompose(chi: &ClassFunction) -> Result<IrrDecomposition, DecomposeError> {
    let n = chi.n();
    let table = character_table(n);
    let data = classes(n);
    let mut mults: BTreeMap<Partition, u64> = BTreeMap::new();
    // <chi, chi^lambda> = (1/n!) sum |C| chi(C) chi^lambda(C).
    for (idx, lambda) in table.shapes().iter().enumerate() {
        let mut acc = BigRational::zero();
        for c in 0..data.class_count() {
            acc += BigRational::from(data.size(c).clone())
                * chi.value_at(c)
                * BigRational::from(table.value(idx, c).clone());
        }
        let m = acc / BigRational::from(data.group_order().clone());
        if m.is_zero() {
            continue;
        }
        if !m.is_integer() || m.numer().is_negative() {
            return Err(DecomposeError::BadMultiplicity {
                n,
                lambda: lambda.clone(),
                multiplicity: m,
            });
        }
        let m64 = u64::try_from(m.numer().clone()).map_err(|_| {
            DecomposeError::BadMultiplicity {
                n,
                lambda: lambda.clone(),
                multiplicity: m.clone(),
            }
        })?;
        mults.insert(lambda.clone(), m64);
    }
    let decomposition = IrrDecomposition { n, mults };
    if &decomposition.character() != chi {
        return Err(DecomposeError::NotInCharacterSpan { n });
    }
    Ok(decomposition)
}

/// The maximum number of parts among the constituents of a decomposition
/// (0 for the zero character).
pub fn length_of(decomposition: &IrrDecomposition) -> u32 {
    decomposition
        .iter()
        .map(|(lambda, _)| lambda.len() as u32)
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgrp::partition::CycleType;
    use num_traits::One;

    #[test]
    fn decompose_regular_representation() {
        // The regular representation: n! at the identity, 0 elsewhere.
        // Every irreducible appears with multiplicity equal to its dimension.
        for n in 1..=6u32 {
            let data = classes(n);
            let chi = ClassFunction::from_fn(n, |mu| {
                if mu == &CycleType::identity(n) {
                    BigRational::from(data.group_order().clone())
                } else {
                    BigRational::zero()
                }
            });
            let dec = decompose(&chi).expect("regular rep is genuine");
            let table = character_table(n);
            for (idx, lambda) in table.shapes().iter().enumerate() {
                assert_eq!(
                    BigInt::from(dec.mult(lambda)),
                    table.dim(idx).clone(),
                    "regular rep multiplicity of {lambda} in S_{n}"
                );
            }
        }
    }

    #[test]
    fn decompose_rejects_non_characters() {
        // The sign character halved is not genuine.
        let chi = ClassFunction::sign(4).scale_by(|_| {
            BigRational::new(BigInt::one(), BigInt::from(2))
        });
        match decompose(&chi) {
            Err(DecomposeError::BadMultiplicity { multiplicity, .. }) => {
                assert_eq!(rational_str(&multiplicity), "1/2");
            }
            other => panic!("expected BadMultiplicity, got {other:?}"),
        }
        // trivial - sign has a negative multiplicity after negation.
        let bad = &(-&ClassFunction::trivial(4)) + &ClassFunction::sign(4);
        assert!(decompose(&bad).is_err());
    }

    #[test]
    fn branching_matches_character_restriction() {
        // Restrict chi^lambda to S_{n-1} at the level of class functions and
        // compare with the combinatorial branching rule.
        for n in 2..=8u32 {
            let table = character_table(n);
            for lambda in table.shapes() {
                let chi = irreducible_character(lambda);
                let restricted = decompose(&chi.restrict()).expect("restriction is genuine");
                let mut expected: BTreeMap<Partition, u64> = BTreeMap::new();
                for smaller in lambda.branch_restrict() {
                    *expected.entry(smaller).or_insert(0) += 1;
                }
                for (sh, m) in &expected {
                    assert_eq!(restricted.mult(sh), *m, "branching {lambda} -> {sh}");
                }
                assert_eq!(restricted.constituent_count(), expected.len());
            }
        }
    }

    #[test]
    fn length_and_display() {
        let chi = &irreducible_character(&Partition::new(vec![2, 2]))
            + &(&irreducible_character(&Partition::new(vec![3, 1]))
                + &irreducible_character(&Partition::new(vec![3, 1])));
        let dec = decompose(&chi).unwrap();
        assert_eq!(length_of(&dec), 2);
        assert_eq!(dec.to_string(), "2*V(3,1) + V(2,2)");
        assert_eq!(dec.dim(), BigInt::from(8));
    }
}
