//! Integer partitions and cycle types.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// The empty partition (of 0) is allowed. Partitions are ordered by their
/// position in the canonical enumeration used throughout the crate, which
/// lists the partitions of each n in reverse-lexicographic order:
/// `(n)` first, `(1^n)` last. `Ord` reflects that enumeration order, so a
/// `BTreeMap<Partition, _>` iterates partitions of a fixed n canonically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from its parts.
    ///
    /// Panics if the parts are not weakly decreasing or contain a zero;
    /// passing such input is a programming error, not a data error.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing, got {parts:?}"
        );
        assert!(
            parts.iter().all(|&p| p > 0),
            "partition parts must be positive, got {parts:?}"
        );
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn first_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The padded partition `(n - |λ|, λ1, λ2, ...)` of n.
    ///
    /// Fails unless `n >= |λ| + λ1`, the threshold from which the padding
    /// is again weakly decreasing.
    pub fn pad(&self, n: u32) -> Result<Partition, PadError> {
        let need = self.size() + self.first_part();
        if n < need {
            return Err(PadError {
                lambda: self.clone(),
                n,
                need,
            });
        }
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        let head = n - self.size();
        if head > 0 {
            parts.push(head);
        }
        parts.extend_from_slice(&self.parts);
        Ok(Partition { parts })
    }

    /// Drops the first (largest) part; the inverse of [`Partition::pad`]
    /// on its image. The empty partition maps to itself.
    pub fn unpad(&self) -> Partition {
        Partition {
            parts: self.parts.get(1..).map(<[u32]>::to_vec).unwrap_or_default(),
        }
    }

    /// All partitions obtained by removing one corner box, in order of the
    /// row the box is removed from. These index the irreducible constituents
    /// of the restriction from S_n to S_{n-1}.
    pub fn branch_restrict(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for r in 0..self.parts.len() {
            let removable = r + 1 == self.parts.len() || self.parts[r] > self.parts[r + 1];
            if !removable {
                continue;
            }
            let mut parts = self.parts.clone();
            parts[r] -= 1;
            if parts[r] == 0 {
                parts.remove(r);
            }
            out.push(Partition { parts });
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reverse-lexicographic: (n) < (n-1,1) < ... < (1^n).
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error returned when padding a partition to a degree that is too small.
#[derive(Debug, Clone, Error)]
#[error("cannot pad {lambda} to degree {n}: requires n >= {need}")]
pub struct PadError {
    pub lambda: Partition,
    pub n: u32,
    pub need: u32,
}

/// All partitions of n in canonical (reverse-lexicographic) order.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    let top = max_part.min(remaining);
    for part in (1..=top).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}

/// The cycle type of a permutation: a partition of n whose parts are the
/// cycle lengths (fixed points included as parts equal to 1).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(partition: Partition) -> Self {
        CycleType(partition)
    }

    /// Cycle type of the identity in S_n, i.e. `(1^n)`.
    pub fn identity(n: u32) -> Self {
        CycleType(Partition {
            parts: vec![1; n as usize],
        })
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    /// Degree of the ambient symmetric group.
    pub fn n(&self) -> u32 {
        self.0.size()
    }

    /// Number of cycles of length k.
    pub fn multiplicity(&self, k: u32) -> u32 {
        self.0.parts.iter().filter(|&&p| p == k).count() as u32
    }

    /// Number of fixed points.
    pub fn fixed_points(&self) -> u32 {
        self.multiplicity(1)
    }

    /// The distinct cycle lengths with their multiplicities, longest first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0.parts {
            match out.last_mut() {
                Some((len, m)) if *len == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The cycle type in S_{n+k} obtained by appending k extra fixed points.
    pub fn with_fixed_points(&self, k: u32) -> CycleType {
        let mut parts = self.0.parts.clone();
        parts.extend(std::iter::repeat(1).take(k as usize));
        CycleType(Partition { parts })
    }

    /// Disjoint union of two cycle types (concatenate and re-sort parts).
    pub fn union(&self, other: &CycleType) -> CycleType {
        let mut parts = self.0.parts.clone();
        parts.extend_from_slice(other.parts());
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(Partition { parts })
    }

    /// Sign of any permutation with this cycle type: `(-1)^(n - #cycles)`.
    pub fn sign(&self) -> i32 {
        if (self.n() as usize - self.0.parts.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Order of the centralizer of a permutation of this type:
    /// the product over cycle lengths k of `k^(m_k) * m_k!`.
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::from(1u32);
        for (len, m) in self.multiplicities() {
            for _ in 0..m {
                z *= BigInt::from(len);
            }
            z *= super::classfn::factorial(m);
        }
        z
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}
