//! An independent cross-check for the straightening pipeline.
//!
//! Instead of rewriting words, this oracle realizes the degree-i piece as
//! a quotient of the degree-i part of the exterior algebra on all `w(a,b)`
//! by the subspace generated by the three-term relations wedged with
//! arbitrary monomials, and computes dimension and character by exact
//! sparse row reduction. It shares no code path with straightening beyond
//! the generator type, so agreement of the two is strong evidence both are
//! correct.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::linalg::SparseRow;
use crate::symgrp::classfn::{classes, ClassFunction};
use crate::symgrp::Permutation;

use super::monomial::Generator;

/// Default cap on the point count for the oracle; the exterior algebra has
/// `binom(binom(n,2), i)` monomials and grows steeply past this.
pub const DEFAULT_ORACLE_MAX_N: u32 = 6;

#[derive(Debug, Clone, Error)]
#[error("quotient oracle supports n <= {max_n}, got n = {n} (raise the bound explicitly to override)")]
pub struct OracleBudgetError {
    pub n: u32,
    pub max_n: u32,
}

/// Dimension and character of one graded piece as computed by the oracle.
pub struct OracleResult {
    pub dimension: u64,
    pub character: ClassFunction,
}

/// Runs the oracle with the default bound. See [`quotient_oracle_bounded`].
pub fn quotient_oracle(n: u32, i: u32) -> Result<OracleResult, OracleBudgetError> {
    quotient_oracle_bounded(n, i, DEFAULT_ORACLE_MAX_N)
}

/// Computes dimension and S_n-character of the degree-i piece of the
/// quotient of the exterior algebra on the generators by the three-term
/// relation subspace, entirely via exact linear algebra.
pub fn quotient_oracle_bounded(
    n: u32,
    i: u32,
    max_n: u32,
) -> Result<OracleResult, OracleBudgetError> {
    if n > max_n {
        return Err(OracleBudgetError { n, max_n });
    }
    let gens: Vec<Generator> = pair_generators(n);
    let m = gens.len();
    let gen_index: HashMap<(u32, u32), usize> = gens
        .iter()
        .enumerate()
        .map(|(idx, g)| ((g.a(), g.b()), idx))
        .collect();

    if i as usize > m {
        return Ok(OracleResult {
            dimension: 0,
            character: ClassFunction::zero(n),
        });
    }

    // Wedge monomials: i-subsets of generator indices. Columns are ordered
    // so that monomials with lexicographically larger multisets of second
    // indices come first; each relation then has its non-normal-form term
    // leading, which keeps the elimination sparse.
    let subsets = combinations(m, i as usize);
    let mut order: Vec<usize> = (0..subsets.len()).collect();
    let keys: Vec<Vec<(u32, u32)>> = subsets
        .iter()
        .map(|s| {
            let mut key: Vec<(u32, u32)> =
                s.iter().map(|&g| (gens[g].b(), gens[g].a())).collect();
            key.sort_unstable_by(|x, y| y.cmp(x));
            key
        })
        .collect();
    order.sort_by(|&x, &y| keys[y].cmp(&keys[x]));
    let mut position = vec![0usize; subsets.len()];
    for (pos, &subset_idx) in order.iter().enumerate() {
        position[subset_idx] = pos;
    }
    let subset_index: HashMap<&[usize], usize> = subsets
        .iter()
        .enumerate()
        .map(|(idx, s)| (s.as_slice(), idx))
        .collect();
    let ncols = subsets.len();

    // Relation rows: for each triple x < y < z, the degree-2 element
    // e(x,y)^e(y,z) - e(x,z)^e(y,z) - e(x,y)... in index form
    // R = e_p^e_q - e_r^e_q - e_p^e_r with p = (x,y), q = (y,z), r = (x,z),
    // wedged with every (i-2)-subset of the generators.
    let mut matrix = crate::linalg::Rref::new();
    if i >= 2 {
        let tails = combinations(m, i as usize - 2);
        for x in 1..=n {
            for y in (x + 1)..=n {
                for z in (y + 1)..=n {
                    let p = gen_index[&(x, y)];
                    let q = gen_index[&(y, z)];
                    let r = gen_index[&(x, z)];
                    let pairs: [(usize, usize, i64); 3] =
                        [(p, q, 1), (r, q, -1), (p, r, -1)];
                    for tail in &tails {
                        let mut entries: Vec<(usize, BigRational)> = Vec::new();
                        for &(u, v, c) in &pairs {
                            if tail.binary_search(&u).is_ok() || tail.binary_search(&v).is_ok() {
                                continue;
                            }
                            let (cols, sign) = wedge_insert(tail, u, v);
                            let col = position[subset_index[cols.as_slice()]];
                            entries.push((
                                col,
                                BigRational::from(BigInt::from(c * sign)),
                            ));
                        }
                        if !entries.is_empty() {
                            matrix.insert(SparseRow::from_entries(entries));
                        }
                    }
                }
            }
        }
    }
    matrix.finalize();

    let dimension = (ncols - matrix.rank()) as u64;
    let free_cols: Vec<usize> = matrix.free_columns(ncols);

    // Character: the images of the free columns form a basis of the
    // quotient. A permutation sends the wedge monomial at free column f to
    // +/- the monomial at some column t; if t is free the diagonal
    // contribution is the sign (when t == f), and if t is a pivot the
    // pivot row rewrites it as a combination of free columns.
    let data = classes(n);
    let values: Vec<BigRational> = data
        .types()
        .iter()
        .map(|mu| {
            let sigma = Permutation::representative(mu);
            let mut trace = BigRational::zero();
            for &f in &free_cols {
                let subset = &subsets[order[f]];
                let mut image: Vec<usize> = subset
                    .iter()
                    .map(|&gidx| {
                        let g = gens[gidx].relabel(&sigma);
                        gen_index[&(g.a(), g.b())]
                    })
                    .collect();
                let sign = sort_sign(&mut image);
                let t = position[subset_index[image.as_slice()]];
                if t == f {
                    trace += BigRational::from(BigInt::from(sign));
                } else if matrix.is_pivot(t) {
                    // Pivot row reads e_t + sum(c_f' e_f') = 0 in the
                    // quotient, so e_t = -sum(c_f' e_f'); pick out e_f.
                    if let Some(v) = matrix.row_for_pivot(t).get(f) {
                        trace -= BigRational::from(BigInt::from(sign)) * v;
                    }
                }
                // Landing on a different free column contributes nothing
                // to the diagonal.
            }
            trace
        })
        .collect();

    let character = ClassFunction::from_values(n, values);
    assert_eq!(
        character.dim(),
        &BigRational::from(BigInt::from(dimension)),
        "oracle trace at identity must equal the quotient dimension"
    );
    Ok(OracleResult {
        dimension,
        character,
    })
}

/// All generators `w(a,b)` for n points, ordered by `(a, b)` lexicographically.
fn pair_generators(n: u32) -> Vec<Generator> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in (a + 1)..=n {
            out.push(Generator::new(a, b));
        }
    }
    out
}

/// All k-subsets of `0..m` in lexicographic order, each sorted ascending.
fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, m: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let needed = k - current.len();
        for v in start..=m.saturating_sub(needed) {
            current.push(v);
            rec(v + 1, m, k, current, out);
            current.pop();
        }
    }
    rec(0, m, k, &mut current, &mut out);
    out
}

/// Inserts `u` and `v` into the ascending subset `tail` (all distinct),
/// returning the sorted union and the sign of the sorting permutation of
/// `[u, v, tail...]`.
fn wedge_insert(tail: &[usize], u: usize, v: usize) -> (Vec<usize>, i64) {
    let mut seq: Vec<usize> = Vec::with_capacity(tail.len() + 2);
    seq.push(u);
    seq.push(v);
    seq.extend_from_slice(tail);
    let sign = sort_sign(&mut seq);
    (seq, sign)
}

/// Sorts a duplicate-free sequence ascending, returning the permutation sign.
fn sort_sign(seq: &mut [usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 1..seq.len() {
        let mut j = i;
        while j > 0 && seq[j - 1] > seq[j] {
            seq.swap(j - 1, j);
            inversions += 1;
            j -= 1;
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}
