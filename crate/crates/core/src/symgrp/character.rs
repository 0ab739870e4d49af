//! Irreducible characters of symmetric groups via the
//! Murnaghan–Nakayama rule, with memoization, and cached character
//! tables per degree.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::classfn::{classes, ClassFunction};
use super::partition::{partitions, CycleType, Partition};

/// `chi^lambda(mu)`: the value of the irreducible character of S_n indexed
/// by `lambda` on the class of cycle type `mu`. Requires `|lambda| == |mu|`.
pub fn mn_character(lambda: &Partition, mu: &CycleType) -> BigInt {
    assert_eq!(
        lambda.size(),
        mu.n(),
        "character of shape {lambda} evaluated on a class of S_{}",
        mu.n()
    );
    mn_memo(lambda.parts(), mu.parts())
}

static MN_CACHE: LazyLock<Mutex<HashMap<(Vec<u32>, Vec<u32>), BigInt>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

fn mn_memo(shape: &[u32], cycles: &[u32]) -> BigInt {
    if cycles.is_empty() {
        debug_assert!(shape.is_empty());
        return BigInt::from(1);
    }
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(v) = MN_CACHE.lock().unwrap().get(&key) {
        return v.clone();
    }
    let value = mn_expand(shape, cycles);
    MN_CACHE.lock().unwrap().insert(key, value.clone());
    value
}

/// One step of the Murnaghan–Nakayama recursion: strip a border strip of
/// length `cycles[0]` from `shape` in every legal way.
///
/// Shapes are handled through their beta-sets `beta_i = shape_i + (m-1-i)`
/// (first-column hook lengths): removing a border strip of length k is
/// exactly replacing some `beta_j` by `beta_j - k`, legal when the result is
/// nonnegative and not already in the beta-set. The strip height (rows
/// spanned minus one) equals the number of beta values strictly between
/// `beta_j - k` and `beta_j`.
fn mn_expand(shape: &[u32], cycles: &[u32]) -> BigInt {
    let k = cycles[0];
    let rest = &cycles[1..];
    let m = shape.len();
    let beta: Vec<u32> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (m - 1 - i) as u32)
        .collect();
    let mut total = BigInt::zero();
    for j in 0..m {
        if beta[j] < k {
            continue;
        }
        let target = beta[j] - k;
        if beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&b| b > target && b < beta[j]).count();
        let mut new_beta = beta.clone();
        new_beta[j] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let new_shape: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (m - 1 - i) as u32)
            .filter(|&p| p > 0)
            .collect();
        let term = mn_memo(&new_shape, rest);
        if height % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// The full character table of S_n: one row per partition (canonical
/// order), one column per conjugacy class (canonical order).
pub struct CharacterTable {
    n: u32,
    shapes: Vec<Partition>,
    values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn row(&self, shape_idx: usize) -> &[BigInt] {
        &self.values[shape_idx]
    }

    pub fn value(&self, shape_idx: usize, class_idx: usize) -> &BigInt {
        &self.values[shape_idx][class_idx]
    }

    /// Dimension of the irreducible indexed by row `shape_idx`.
    pub fn dim(&self, shape_idx: usize) -> &BigInt {
        self.values[shape_idx].last().expect("nonempty row")
    }
}

static TABLE_CACHE: LazyLock<Mutex<HashMap<u32, Arc<CharacterTable>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The character table of S_n (cached).
pub fn character_table(n: u32) -> Arc<CharacterTable> {
    let mut cache = TABLE_CACHE.lock().unwrap();
    cache
        .entry(n)
        .or_insert_with(|| {
            let shapes = partitions(n);
            let data = classes(n);
            let values = shapes
                .iter()
                .map(|lambda| {
                    data.types()
                        .iter()
                        .map(|mu| mn_character(lambda, mu))
                        .collect()
                })
                .collect();
            Arc::new(CharacterTable { n, shapes, values })
        })
        .clone()
}

/// The irreducible character `chi^lambda` as a [`ClassFunction`].
pub fn irreducible_character(lambda: &Partition) -> ClassFunction {
    let n = lambda.size();
    ClassFunction::from_fn(n, |mu| BigRational::from(mn_character(lambda, mu)))
}
