//! Permutations of `{1, ..., n}` in one-line notation.

use std::fmt;

use super::partition::CycleType;

/// A permutation of `{1, ..., n}`. Internally `map[i-1] = sigma(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation `[sigma(1), ..., sigma(n)]`.
    ///
    /// Panics unless the images are a rearrangement of `1..=n`.
    pub fn from_images(map: Vec<u32>) -> Self {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            assert!(
                v >= 1 && v as usize <= n && !std::mem::replace(&mut seen[v as usize - 1], true),
                "images must be a rearrangement of 1..={n}, got {map:?}"
            );
        }
        Permutation { map }
    }

    pub fn identity(n: u32) -> Self {
        Permutation {
            map: (1..=n).collect(),
        }
    }

    /// Builds a permutation of `{1..n}` from disjoint cycles. Elements not
    /// mentioned are fixed. Panics on out-of-range or repeated elements.
    pub fn from_cycles(n: u32, cycles: &[Vec<u32>]) -> Self {
        let mut map: Vec<u32> = (1..=n).collect();
        let mut seen = vec![false; n as usize];
        for cycle in cycles {
            for k in 0..cycle.len() {
                let from = cycle[k];
                let to = cycle[(k + 1) % cycle.len()];
                assert!(
                    from >= 1 && from <= n,
                    "cycle element {from} out of range 1..={n}"
                );
                assert!(
                    !std::mem::replace(&mut seen[from as usize - 1], true),
                    "element {from} appears in more than one cycle"
                );
                map[from as usize - 1] = to;
            }
        }
        Permutation { map }
    }

    /// A canonical representative of the conjugacy class of cycle type `mu`:
    /// cycles laid out consecutively on `{1..n}`, longest cycle first.
    pub fn representative(mu: &CycleType) -> Self {
        let n = mu.n();
        let mut map: Vec<u32> = (1..=n).collect();
        let mut start = 1u32;
        for &len in mu.parts() {
            for off in 0..len {
                let from = start + off;
                let to = start + (off + 1) % len;
                map[from as usize - 1] = to;
            }
            start += len;
        }
        Permutation { map }
    }

    pub fn degree(&self) -> u32 {
        self.map.len() as u32
    }

    /// The image of a point (1-based).
    pub fn apply(&self, point: u32) -> u32 {
        self.map[point as usize - 1]
    }

    /// Composition acting on the right argument first:
    /// `(self.compose(other)).apply(i) == self.apply(other.apply(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Permutation {
            map: (1..=self.degree()).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0u32; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v as usize - 1] = i as u32 + 1;
        }
        Permutation { map }
    }

    /// The cycle type of this permutation.
    pub fn cycle_type(&self) -> CycleType {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut lens: Vec<u32> = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.map[p] as usize - 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        CycleType::new(super::partition::Partition::new(lens))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgrp::partition::Partition;

    #[test]
    fn cycles_and_one_line_agree() {
        let s = Permutation::from_cycles(4, &[vec![1, 2, 3]]);
        assert_eq!(s.apply(1), 2);
        assert_eq!(s.apply(3), 1);
        assert_eq!(s.apply(4), 4);
        assert_eq!(s.cycle_type(), CycleType::new(Partition::new(vec![3, 1])));
    }

    #[test]
    fn representative_has_requested_type() {
        for n in 1..=7u32 {
            for mu in crate::symgrp::partitions(n) {
                let mu = CycleType::new(mu);
                let sigma = Permutation::representative(&mu);
                assert_eq!(sigma.cycle_type(), mu);
            }
        }
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Permutation::from_cycles(3, &[vec![1, 2]]);
        let b = Permutation::from_cycles(3, &[vec![2, 3]]);
        let ab = a.compose(&b);
        // b sends 2 -> 3, then a fixes 3.
        assert_eq!(ab.apply(2), 3);
        assert_eq!(ab.apply(3), a.apply(2));
        assert_eq!(a.compose(&a.inverse()), Permutation::identity(3));
    }
}
