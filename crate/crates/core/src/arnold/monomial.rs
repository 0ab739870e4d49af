//! Generators and normal-form monomials of the configuration-space
//! cohomology ring.

use std::cmp::Ordering;
use std::fmt;

/// A degree-1 generator `w(a,b)` with `1 <= a < b`. Generators compare by
/// `(b, a)`: this is the order in which factors appear in a normal-form
/// monomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    a: u32,
    b: u32,
}

impl Generator {
    /// Builds `w(min(i,j), max(i,j))`. Panics if `i == j` or either is 0.
    pub fn new(i: u32, j: u32) -> Self {
        assert!(i >= 1 && j >= 1 && i != j, "generator needs two distinct points >= 1, got ({i},{j})");
        Generator {
            a: i.min(j),
            b: i.max(j),
        }
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// Relabels both points by `sigma` (and re-normalizes the order).
    pub fn relabel(&self, sigma: &crate::symgrp::Permutation) -> Generator {
        Generator::new(sigma.apply(self.a), sigma.apply(self.b))
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.b, self.a).cmp(&(other.b, other.a))
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w({},{})", self.a, self.b)
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A normal-form ("no broken circuit") monomial: a product of generators
/// whose second indices are strictly increasing. The empty product is the
/// unit of the ring.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NbcMonomial {
    factors: Vec<Generator>,
}

impl NbcMonomial {
    /// Wraps a factor list, checking the normal-form invariant.
    pub fn new(factors: Vec<Generator>) -> Self {
        assert!(
            factors.windows(2).all(|w| w[0].b() < w[1].b()),
            "normal form requires strictly increasing second indices, got {factors:?}"
        );
        NbcMonomial { factors }
    }

    pub fn unit() -> Self {
        NbcMonomial { factors: Vec::new() }
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }
}

impl fmt::Display for NbcMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for g in &self.factors {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NbcMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The normal-form basis of the degree-i graded piece for n points, in
/// increasing monomial order. Empty when `i > n - 1`; the single unit
/// monomial when `i == 0`.
pub fn basis(n: u32, i: u32) -> Vec<NbcMonomial> {
    let mut out = Vec::new();
    let mut current: Vec<Generator> = Vec::new();
    extend_basis(n, i, 2, &mut current, &mut out);
    out
}

fn extend_basis(
    n: u32,
    i: u32,
    min_b: u32,
    current: &mut Vec<Generator>,
    out: &mut Vec<NbcMonomial>,
) {
    if current.len() == i as usize {
        out.push(NbcMonomial {
            factors: current.clone(),
        });
        return;
    }
    let remaining = i as usize - current.len();
    for b in min_b..=n {
        // Factors still to be chosen need distinct second indices in b..=n.
        if (n - b) as usize + 1 < remaining {
            break;
        }
        for a in 1..b {
            current.push(Generator { a, b });
            extend_basis(n, i, b + 1, current, out);
            current.pop();
        }
    }
}
