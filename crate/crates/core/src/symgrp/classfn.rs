//! Conjugacy class data and class functions on symmetric groups.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::partition::{partitions, CycleType};

pub fn factorial(n: u32) -> BigInt {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= BigInt::from(k);
    }
    f
}

/// Size of the conjugacy class of cycle type `mu` in S_n, i.e. `n! / z_mu`
/// where `z_mu` is the centralizer order.
pub fn class_size(mu: &CycleType) -> BigInt {
    let n = mu.n();
    let z = mu.centralizer_order();
    let f = factorial(n);
    debug_assert!((&f % &z).is_zero());
    f / z
}

/// Cached per-degree conjugacy class data: the cycle types of S_n in
/// canonical order, their class sizes, and an index for lookups.
pub struct ClassData {
    n: u32,
    types: Vec<CycleType>,
    index: HashMap<Vec<u32>, usize>,
    sizes: Vec<BigInt>,
    group_order: BigInt,
}

impl ClassData {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Cycle types in canonical (reverse-lexicographic) order; the identity
    /// class `(1^n)` is last.
    pub fn types(&self) -> &[CycleType] {
        &self.types
    }

    pub fn class_count(&self) -> usize {
        self.types.len()
    }

    pub fn size(&self, idx: usize) -> &BigInt {
        &self.sizes[idx]
    }

    pub fn group_order(&self) -> &BigInt {
        &self.group_order
    }

    /// Position of a cycle type in the canonical order.
    ///
    /// Panics if the partition is not a partition of n; mixing degrees is a
    /// programming error.
    pub fn index_of(&self, mu: &CycleType) -> usize {
        *self
            .index
            .get(mu.parts())
            .unwrap_or_else(|| panic!("cycle type {mu} is not a class of S_{}", self.n))
    }

    pub fn identity_index(&self) -> usize {
        self.types.len() - 1
    }
}

static CLASS_CACHE: LazyLock<Mutex<HashMap<u32, Arc<ClassData>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The conjugacy class data of S_n (cached).
pub fn classes(n: u32) -> Arc<ClassData> {
    let mut cache = CLASS_CACHE.lock().unwrap();
    cache
        .entry(n)
        .or_insert_with(|| {
            let types: Vec<CycleType> = partitions(n).into_iter().map(CycleType::new).collect();
            let index = types
                .iter()
                .enumerate()
                .map(|(i, t)| (t.parts().to_vec(), i))
                .collect();
            let sizes = types.iter().map(class_size).collect();
            Arc::new(ClassData {
                n,
                types,
                index,
                sizes,
                group_order: factorial(n),
            })
        })
        .clone()
}

/// A class function on S_n with exact rational values, stored against the
/// canonical ordering of the conjugacy classes.
#[derive(Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: u32,
    values: Vec<BigRational>,
}

impl ClassFunction {
    pub fn from_values(n: u32, values: Vec<BigRational>) -> Self {
        let data = classes(n);
        assert_eq!(
            values.len(),
            data.class_count(),
            "class function on S_{n} needs {} values",
            data.class_count()
        );
        ClassFunction { n, values }
    }

    /// Builds a class function by evaluating `f` on each cycle type.
    pub fn from_fn(n: u32, mut f: impl FnMut(&CycleType) -> BigRational) -> Self {
        let data = classes(n);
        let values = data.types().iter().map(&mut f).collect();
        ClassFunction { n, values }
    }

    pub fn zero(n: u32) -> Self {
        Self::from_fn(n, |_| BigRational::zero())
    }

    /// Character of the trivial representation.
    pub fn trivial(n: u32) -> Self {
        Self::from_fn(n, |_| BigRational::one())
    }

    /// Character of the sign representation.
    pub fn sign(n: u32) -> Self {
        Self::from_fn(n, |mu| BigRational::from(BigInt::from(mu.sign())))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn value_at(&self, idx: usize) -> &BigRational {
        &self.values[idx]
    }

    /// Value on the class of cycle type `mu`.
    pub fn value(&self, mu: &CycleType) -> &BigRational {
        let data = classes(self.n);
        &self.values[data.index_of(mu)]
    }

    /// Value at the identity; for a genuine character this is the dimension.
    pub fn dim(&self) -> &BigRational {
        &self.values[self.values.len() - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    /// Multiplies pointwise by a scalar function of the cycle type.
    pub fn scale_by(&self, mut f: impl FnMut(&CycleType) -> BigRational) -> ClassFunction {
        let data = classes(self.n);
        let values = data
            .types()
            .iter()
            .zip(&self.values)
            .map(|(mu, v)| f(mu) * v)
            .collect();
        ClassFunction {
            n: self.n,
            values,
        }
    }

    /// The standard inner product `(1/n!) * sum over classes |C| a(C) b(C)`.
    ///
    /// Panics if the degrees differ; mixing degrees is a programming error.
    pub fn inner(&self, other: &ClassFunction) -> BigRational {
        assert_eq!(
            self.n, other.n,
            "inner product requires matching degrees, got {} and {}",
            self.n, other.n
        );
        let data = classes(self.n);
        let mut acc = BigRational::zero();
        for idx in 0..self.values.len() {
            acc += BigRational::from(data.size(idx).clone()) * &self.values[idx] * &other.values[idx];
        }
        acc / BigRational::from(data.group_order().clone())
    }

    /// Restriction to S_{n-1}: the value on `mu` is the value on `mu` with
    /// one extra fixed point appended.
    pub fn restrict(&self) -> ClassFunction {
        assert!(self.n > 0, "cannot restrict a class function on S_0");
        ClassFunction::from_fn(self.n - 1, |mu| self.value(&mu.with_fixed_points(1)).clone())
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let data = classes(self.n);
        write!(f, "ClassFunction(S_{}; ", self.n)?;
        for (idx, mu) in data.types().iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}={}", mu, rational_str(&self.values[idx]))?;
        }
        write!(f, ")")
    }
}

/// Renders an exact rational as `p` or `p/q` without a superfluous
/// denominator of 1.
pub fn rational_str(v: &BigRational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

fn zip_values(
    a: &ClassFunction,
    b: &ClassFunction,
    f: impl Fn(&BigRational, &BigRational) -> BigRational,
) -> ClassFunction {
    assert_eq!(
        a.n, b.n,
        "class function arithmetic requires matching degrees, got {} and {}",
        a.n, b.n
    );
    ClassFunction {
        n: a.n,
        values: a.values.iter().zip(&b.values).map(|(x, y)| f(x, y)).collect(),
    }
}

impl Add for &ClassFunction {
    type Output = ClassFunction;
    fn add(self, rhs: &ClassFunction) -> ClassFunction {
        zip_values(self, rhs, |x, y| x + y)
    }
}

impl Sub for &ClassFunction {
    type Output = ClassFunction;
    fn sub(self, rhs: &ClassFunction) -> ClassFunction {
        zip_values(self, rhs, |x, y| x - y)
    }
}

impl Neg for &ClassFunction {
    type Output = ClassFunction;
    fn neg(self) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: self.values.iter().map(|x| -x).collect(),
        }
    }
}

/// True if every value of `chi` is a nonnegative integer (used for
/// sanity-checking multiplicity-like data).
pub fn is_nonnegative_integral(chi: &ClassFunction) -> bool {
    chi.values
        .iter()
        .all(|v| v.is_integer() && !v.numer().is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 0..=8u32 {
            let data = classes(n);
            let total: BigInt = (0..data.class_count()).map(|i| data.size(i).clone()).sum();
            assert_eq!(&total, data.group_order(), "n = {n}");
        }
    }

    #[test]
    fn s4_class_sizes_match_hand_count() {
        let data = classes(4);
        let sizes: Vec<u64> = (0..data.class_count())
            .map(|i| u64::try_from(data.size(i).clone()).unwrap())
            .collect();
        // Canonical order: (4), (3,1), (2,2), (2,1,1), (1^4).
        assert_eq!(sizes, vec![6, 8, 3, 6, 1]);
        assert_eq!(data.identity_index(), 4);
        assert_eq!(data.types()[4], CycleType::identity(4));
    }

    #[test]
    fn trivial_and_sign_are_orthonormal() {
        for n in 2..=7u32 {
            let t = ClassFunction::trivial(n);
            let s = ClassFunction::sign(n);
            assert_eq!(t.inner(&t), BigRational::one(), "<triv,triv> at n={n}");
            assert_eq!(s.inner(&s), BigRational::one(), "<sign,sign> at n={n}");
            assert!(t.inner(&s).is_zero(), "<triv,sign> at n={n}");
        }
    }

    #[test]
    fn restriction_of_trivial_is_trivial() {
        let t = ClassFunction::trivial(6);
        assert_eq!(t.restrict(), ClassFunction::trivial(5));
        let s = ClassFunction::sign(6);
        assert_eq!(s.restrict(), ClassFunction::sign(5));
    }

    #[test]
    fn rational_rendering() {
        assert_eq!(rational_str(&BigRational::from(BigInt::from(-3))), "-3");
        assert_eq!(
            rational_str(&(BigRational::from(BigInt::from(1)) / BigRational::from(BigInt::from(2)))),
            "1/2"
        );
    }
}
