//! Exact sparse linear algebra over the rationals: reduced row-echelon
//! form and linear solving, used by the cross-check oracles and the
//! character-polynomial fitter. No floating point, no pivétudes:
//! pivots are chosen deterministically as the leading (smallest-index)
//! column of each row.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

/// A sparse row vector: entries sorted by column index, all nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseRow {
    entries: Vec<(usize, BigRational)>,
}

impl SparseRow {
    pub fn zero() -> Self {
        SparseRow { entries: Vec::new() }
    }

    /// Builds a row from (column, value) pairs in any order; duplicate
    /// columns are summed and zero entries dropped.
    pub fn from_entries(mut raw: Vec<(usize, BigRational)>) -> Self {
        raw.sort_by_key(|&(c, _)| c);
        let mut entries: Vec<(usize, BigRational)> = Vec::with_capacity(raw.len());
        for (c, v) in raw {
            match entries.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => entries.push((c, v)),
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        SparseRow { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Column index of the leading (first) nonzero entry.
    pub fn lead(&self) -> Option<usize> {
        self.entries.first().map(|&(c, _)| c)
    }

    pub fn get(&self, col: usize) -> Option<&BigRational> {
        self.entries
            .binary_search_by_key(&col, |&(c, _)| c)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.entries.iter().map(|(c, v)| (*c, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn scale(&mut self, factor: &BigRational) {
        debug_assert!(!factor.is_zero());
        for (_, v) in &mut self.entries {
            *v *= factor;
        }
    }

    /// `self - factor * other`, merging the sorted entry lists.
    fn sub_scaled(&self, factor: &BigRational, other: &SparseRow) -> SparseRow {
        let mut entries = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() || j < other.entries.len() {
            let pick_self = j >= other.entries.len()
                || (i < self.entries.len() && self.entries[i].0 < other.entries[j].0);
            let pick_other = i >= self.entries.len()
                || (j < other.entries.len() && other.entries[j].0 < self.entries[i].0);
            if pick_self {
                entries.push(self.entries[i].clone());
                i += 1;
            } else if pick_other {
                let (c, v) = &other.entries[j];
                entries.push((*c, -(factor * v)));
                j += 1;
            } else {
                let (c, a) = &self.entries[i];
                let v = a - factor * &other.entries[j].1;
                if !v.is_zero() {
                    entries.push((*c, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseRow { entries }
    }
}

/// A matrix in reduced row-echelon form, built incrementally. Rows are
/// keyed by pivot column; after [`Rref::finalize`], every pivot row is
/// supported only on its own pivot and on non-pivot (free) columns.
pub struct Rref {
    rows: BTreeMap<usize, SparseRow>,
    finalized: bool,
}

impl Default for Rref {
    fn default() -> Self {
        Self::new()
    }
}

impl Rref {
    pub fn new() -> Self {
        Rref {
            rows: BTreeMap::new(),
            finalized: false,
        }
    }

    /// Forward-reduces `row` against the current pivots and, if a nonzero
    /// remainder survives, normalizes it and adopts its leading column as
    /// a new pivot. Returns true when the rank grew.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        debug_assert!(!self.finalized, "insert after finalize");
        while let Some(lead) = row.lead() {
            match self.rows.get(&lead) {
                Some(pivot_row) => {
                    let factor = row.get(lead).expect("lead entry exists").clone();
                    row = row.sub_scaled(&factor, pivot_row);
                }
                None => {
                    let inv = row.get(lead).expect("lead entry exists").recip();
                    row.scale(&inv);
                    self.rows.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }

    /// Back-substitution pass: clears every pivot column from every other
    /// row, producing the canonical reduced form.
    pub fn finalize(&mut self) {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        for &p in pivots.iter().rev() {
            let mut row = self.rows.remove(&p).expect("pivot row exists");
            loop {
                let target = row
                    .iter()
                    .find(|&(c, _)| c > p && self.rows.contains_key(&c))
                    .map(|(c, v)| (c, v.clone()));
                match target {
                    Some((c, v)) => row = row.sub_scaled(&v, &self.rows[&c]),
                    None => break,
                }
            }
            self.rows.insert(p, row);
        }
        self.finalized = true;
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn row_for_pivot(&self, col: usize) -> &SparseRow {
        &self.rows[&col]
    }

    /// The non-pivot columns among `0..ncols`.
    pub fn free_columns(&self, ncols: usize) -> Vec<usize> {
        (0..ncols).filter(|c| !self.rows.contains_key(c)).collect()
    }

    /// Residual of `row` after eliminating every pivot: zero exactly when
    /// `row` lies in the row span.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let target = row
                .iter()
                .find(|&(c, _)| self.rows.contains_key(&c))
                .map(|(c, v)| (c, v.clone()));
            match target {
                Some((c, v)) => row = row.sub_scaled(&v, &self.rows[&c]),
                None => return row,
            }
        }
    }
}

/// Builds the reduced row-echelon form of a list of rows.
pub fn rref(rows: impl IntoIterator<Item = SparseRow>) -> Rref {
    let mut m = Rref::new();
    for row in rows {
        m.insert(row);
    }
    m.finalize();
    m
}

/// Outcome of an exact linear solve.
pub struct LinearSolution {
    /// A particular solution with every free variable set to zero. When the
    /// system is inconsistent this instead solves the maximal consistent
    /// subsystem selected by elimination order (useful for producing a
    /// counterexample witness downstream).
    pub values: Vec<BigRational>,
    /// Dimension of the solution space of the homogeneous system.
    pub nullity: usize,
    /// False when some equation reduced to `0 = nonzero`.
    pub consistent: bool,
}

/// Solves `A x = b` exactly, where each element of `rows` is one equation
/// `(coefficients, rhs)` over `ncols` unknowns.
pub fn solve_exact(rows: Vec<(SparseRow, BigRational)>, ncols: usize) -> LinearSolution {
    let aug = ncols; // augmented column index
    let mut m = Rref::new();
    for (row, rhs) in rows {
        let mut entries: Vec<(usize, BigRational)> =
            row.iter().map(|(c, v)| (c, v.clone())).collect();
        if !rhs.is_zero() {
            entries.push((aug, rhs));
        }
        m.insert(SparseRow::from_entries(entries));
    }
    m.finalize();
    let consistent = !m.is_pivot(aug);
    let mut values = vec![BigRational::zero(); ncols];
    let mut rank_coeff = 0usize;
    for p in m.pivot_columns().collect::<Vec<_>>() {
        if p == aug {
            continue;
        }
        rank_coeff += 1;
        // Reduced pivot row of [A | b] reads `x_p + (free terms) = v`,
        // so with all free variables at zero, `x_p = v`.
        if let Some(v) = m.row_for_pivot(p).get(aug) {
            values[p] = v.clone();
        }
    }
    LinearSolution {
        values,
        nullity: ncols - rank_coeff,
        consistent,
    }
}
