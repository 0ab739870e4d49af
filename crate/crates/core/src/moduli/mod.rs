//! Characters of the symmetric-group action on the cohomology of the
//! moduli space of n-pointed genus-zero curves.
//!
//! Two families are computed, both derived degree by degree from the
//! configuration-space characters by exact class-function arithmetic:
//!
//! * the *shifted* family `R_i` at degree n: the character of S_n on the
//!   degree-i cohomology of the moduli space with n+1 marked points,
//!   restricted to the subgroup permuting the first n points. It satisfies
//!   the splitting `chi_i(config) = R_i + R_{i-1}` with `R_0` trivial,
//!   which is how it is computed (and independently re-checked by the
//!   theta-subalgebra oracle);
//! * the *plain* family `Q_i` at degree n: the character of S_n on the
//!   degree-i cohomology of the moduli space with n marked points, obtained
//!   by the transfer recursion `Q_i = R_i - (X1 - 1) * Q_{i-1}` with `Q_0`
//!   trivial, where `X1 - 1` multiplies each class value by
//!   (number of fixed points - 1).
//!
//! Both constructions validate that the result is a genuine character
//! (integral, nonnegative irreducible multiplicities) and that it vanishes
//! beyond the dimension of the space (`i > n - 2` for the shifted family,
//! `i > n - 3` for the plain family).

pub mod theta;

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::arnold;
use crate::symgrp::decompose::{decompose, DecomposeError};
use crate::symgrp::classfn::{classes, ClassFunction};

pub use theta::{theta_subalgebra_oracle, theta_subalgebra_oracle_bounded};

/// The character `R_i` of S_n on degree-i moduli cohomology with one extra
/// (n+1st) marked point, restricted to S_n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShiftedCharacter {
    n: u32,
    i: u32,
    chi: ClassFunction,
}

impl ShiftedCharacter {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.i
    }

    pub fn class_function(&self) -> &ClassFunction {
        &self.chi
    }
}

/// The character `Q_i` of S_n on the degree-i cohomology of the moduli
/// space of n-pointed genus-zero curves.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuliCharacter {
    n: u32,
    i: u32,
    chi: ClassFunction,
}

impl ModuliCharacter {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.i
    }

    pub fn class_function(&self) -> &ClassFunction {
        &self.chi
    }
}

#[derive(Debug, Clone, Error)]
pub enum ModuliError {
    #[error("moduli of n-pointed curves needs n >= 3, got n = {n}")]
    TooFewPoints { n: u32 },
    #[error("derived class function at (n,i)=({n},{i}) is not a genuine character: {source}")]
    NotGenuine {
        n: u32,
        i: u32,
        #[source]
        source: DecomposeError,
    },
    #[error(
        "vanishing violated at (n,i)=({n},{i}): {family} must vanish for i > {top}, \
         but the derived character is nonzero"
    )]
    VanishingViolated {
        n: u32,
        i: u32,
        family: &'static str,
        top: u32,
    },
}

static SHIFTED_CACHE: LazyLock<Mutex<HashMap<(u32, u32), ClassFunction>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));
static MODULI_CACHE: LazyLock<Mutex<HashMap<(u32, u32), ClassFunction>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

fn shifted_raw(n: u32, i: u32) -> ClassFunction {
    if let Some(hit) = SHIFTED_CACHE.lock().unwrap().get(&(n, i)) {
        return hit.clone();
    }
    // R_i = chi_i(config) - R_{i-1}, R_0 = trivial; build from the bottom.
    let mut r = ClassFunction::trivial(n);
    let mut level = 0u32;
    while level < i {
        // Reuse the deepest cached level below the target if available.
        level += 1;
        let cached = SHIFTED_CACHE.lock().unwrap().get(&(n, level)).cloned();
        r = match cached {
            Some(hit) => hit,
            None => {
                let next = &arnold::character(n, level) - &r;
                SHIFTED_CACHE
                    .lock()
                    .unwrap()
                    .insert((n, level), next.clone());
                next
            }
        };
    }
    if i == 0 {
        SHIFTED_CACHE.lock().unwrap().insert((n, 0), r.clone());
    }
    r
}

/// Computes `R_i` at degree n, validating genuineness and vanishing.
pub fn shifted_character(n: u32, i: u32) -> Result<ShiftedCharacter, ModuliError> {
    let chi = shifted_raw(n, i);
    if let Err(source) = decompose(&chi) {
        return Err(ModuliError::NotGenuine { n, i, source });
    }
    // The (n+1)-pointed moduli space has dimension n - 2.
    if n >= 2 && i > n - 2 && !chi.is_zero() {
        return Err(ModuliError::VanishingViolated {
            n,
            i,
            family: "the shifted family",
            top: n - 2,
        });
    }
    Ok(ShiftedCharacter { n, i, chi })
}

/// Computes `Q_i` at degree n, validating genuineness and vanishing.
pub fn moduli_character(n: u32, i: u32) -> Result<ModuliCharacter, ModuliError> {
    if n < 3 {
        return Err(ModuliError::TooFewPoints { n });
    }
    let cached = MODULI_CACHE.lock().unwrap().get(&(n, i)).cloned();
    let chi = match cached {
        Some(hit) => hit,
        None => {
            let mut q = ClassFunction::trivial(n);
            for level in 1..=i {
                let shifted = shifted_character(n, level)?;
                let transfer = q.scale_by(|mu| {
                    BigRational::from(BigInt::from(mu.fixed_points()) - BigInt::from(1))
                });
                q = &shifted.chi - &transfer;
                MODULI_CACHE.lock().unwrap().insert((n, level), q.clone());
            }
            if i == 0 {
                MODULI_CACHE.lock().unwrap().insert((n, 0), q.clone());
            }
            q
        }
    };
    if let Err(source) = decompose(&chi) {
        return Err(ModuliError::NotGenuine { n, i, source });
    }
    // The n-pointed moduli space has dimension n - 3.
    if i > n - 3 && !chi.is_zero() {
        return Err(ModuliError::VanishingViolated {
            n,
            i,
            family: "the moduli family",
            top: n - 3,
        });
    }
    Ok(ModuliCharacter { n, i, chi })
}

/// Ways the two families can fail to be compatible under restriction.
#[derive(Debug, Clone, Error)]
pub enum RestrictionError {
    #[error(
        "restriction failure at (n,i)=({n},{i}) on class {mu}: \
         Q_i at n+1 with a fixed point appended gives {got}, but R_i at n gives {expected}"
    )]
    ValueMismatch {
        n: u32,
        i: u32,
        mu: String,
        expected: String,
        got: String,
    },
    #[error(
        "branching failure at (n,i)=({n},{i}): restriction of the decomposition \
         of Q_i at n+1 gives [{got}], but R_i at n decomposes as [{expected}]"
    )]
    BranchingMismatch {
        n: u32,
        i: u32,
        expected: String,
        got: String,
    },
    #[error(transparent)]
    Moduli(#[from] ModuliError),
}

/// Verifies that the shifted family really is the restriction of the plain
/// family with one more marked point, at two levels:
///
/// 1. class-function level: `Q_i` at n+1 evaluated on `mu` with an extra
///    fixed point equals `R_i` at n on `mu`, for every class `mu` of S_n;
/// 2. branching level: the irreducible decomposition of `R_i` at n is
///    exactly the branching restriction of the decomposition of `Q_i` at n+1.
pub fn restriction_check(n: u32, i: u32) -> Result<(), RestrictionError> {
    let plain = moduli_character(n + 1, i)?;
    let shifted = shifted_character(n, i)?;
    let data = classes(n);
    for mu in data.types() {
        let expected = shifted.chi.value(mu);
        let got = plain.chi.value(&mu.with_fixed_points(1));
        if expected != got {
            return Err(RestrictionError::ValueMismatch {
                n,
                i,
                mu: mu.to_string(),
                expected: crate::symgrp::classfn::rational_str(expected),
                got: crate::symgrp::classfn::rational_str(got),
            });
        }
    }
    let shifted_dec =
        decompose(&shifted.chi).map_err(|source| ModuliError::NotGenuine { n, i, source })?;
    let plain_dec = decompose(&plain.chi).map_err(|source| ModuliError::NotGenuine {
        n: n + 1,
        i,
        source,
    })?;
    let branched = plain_dec.restrict_branch();
    if branched != shifted_dec {
        return Err(RestrictionError::BranchingMismatch {
            n,
            i,
            expected: shifted_dec.to_string(),
            got: branched.to_string(),
        });
    }
    Ok(())
}
