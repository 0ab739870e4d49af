//! Independent oracle for the shifted family: the difference subalgebra.
//!
//! Inside the configuration-space ring, the elements
//! `t(a,b) = w(a,b) - w(1,2)` (for `(a,b) != (1,2)`) generate a subalgebra
//! whose degree-i piece is an S_n-subrepresentation isomorphic to the
//! degree-i moduli cohomology with one extra marked point (restricted to
//! S_n). Each `t(a,b)` squares to zero, so products over i-element subsets
//! of the generators span the degree-i piece. This oracle materializes
//! that span by exact row reduction and extracts its character, giving an
//! independent consistency check on the splitting-derived `R_i`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arnold::oracle::{OracleBudgetError, OracleResult, DEFAULT_ORACLE_MAX_N};
use crate::arnold::{basis, AlgebraElement};
use crate::linalg::{Rref, SparseRow};
use crate::symgrp::classfn::{classes, ClassFunction};
use crate::symgrp::Permutation;
use std::collections::HashMap;

/// Runs the oracle with the default point-count bound.
pub fn theta_subalgebra_oracle(n: u32, i: u32) -> Result<OracleResult, OracleBudgetError> {
    theta_subalgebra_oracle_bounded(n, i, DEFAULT_ORACLE_MAX_N)
}

/// Computes dimension and character of the degree-i piece of the difference
/// subalgebra by spanning products of `i` distinct generators and reducing.
///
/// Panics if the span is not invariant under the relabelling action (it
/// always is; the residual check guards against internal errors).
pub fn theta_subalgebra_oracle_bounded(
    n: u32,
    i: u32,
    max_n: u32,
) -> Result<OracleResult, OracleBudgetError> {
    if n > max_n {
        return Err(OracleBudgetError { n, max_n });
    }
    assert!(n >= 2, "difference generators need the base pair (1,2)");

    if i == 0 {
        return Ok(OracleResult {
            dimension: 1,
            character: ClassFunction::trivial(n),
        });
    }

    // Generators t(a,b) = w(a,b) - w(1,2), all pairs except (1,2) itself.
    let mut gens: Vec<AlgebraElement> = Vec::new();
    let base = AlgebraElement::generator(n, 1, 2);
    for a in 1..=n {
        for b in (a + 1)..=n {
            if (a, b) == (1, 2) {
                continue;
            }
            gens.push(AlgebraElement::generator(n, a, b).sub(&base));
        }
    }

    // Coordinates relative to the degree-i normal-form basis.
    let mono_basis = basis(n, i);
    let mono_index: HashMap<_, _> = mono_basis
        .iter()
        .enumerate()
        .map(|(idx, m)| (m.clone(), idx))
        .collect();
    let to_row = |x: &AlgebraElement| -> SparseRow {
        SparseRow::from_entries(
            x.terms()
                .map(|(m, c)| (mono_index[m], c.clone()))
                .collect(),
        )
    };

    // Span the products over i-element subsets of the generators
    // (each generator squares to zero, so repeated factors vanish).
    let mut matrix = Rref::new();
    span_products(&gens, 0, i as usize, &AlgebraElement::one(n), &mut |p| {
        if !p.is_zero() {
            matrix.insert(to_row(p));
        }
    });
    matrix.finalize();
    let dimension = matrix.rank() as u64;

    // Character: the pivot rows form a basis of the span; the expansion
    // coefficient of sigma(v_p) on v_p is its entry at pivot column p.
    let pivots: Vec<usize> = matrix.pivot_columns().collect();
    let data = classes(n);
    let values: Vec<BigRational> = data
        .types()
        .iter()
        .map(|mu| {
            let sigma = Permutation::representative(mu);
            let mut trace = BigRational::zero();
            for &p in &pivots {
                let row = matrix.row_for_pivot(p);
                let element = row_to_element(n, i, row, &mono_basis);
                let image = element.act(&sigma);
                let image_row = to_row(&image);
                assert!(
                    matrix.reduce(image_row.clone()).is_zero(),
                    "difference subalgebra not invariant at (n,i)=({n},{i})"
                );
                if let Some(v) = image_row.get(p) {
                    trace += v;
                }
            }
            trace
        })
        .collect();

    let character = ClassFunction::from_values(n, values);
    assert_eq!(
        character.dim(),
        &BigRational::from(BigInt::from(dimension)),
        "trace at identity must equal the span dimension"
    );
    Ok(OracleResult {
        dimension,
        character,
    })
}

/// Recursively multiplies out all products of `want` distinct generators
/// starting from index `from`, invoking `sink` on each.
fn span_products(
    gens: &[AlgebraElement],
    from: usize,
    want: usize,
    acc: &AlgebraElement,
    sink: &mut impl FnMut(&AlgebraElement),
) {
    if want == 0 {
        sink(acc);
        return;
    }
    // Upper bound keeps `want - 1` further factors available; the range is
    // empty whenever fewer than `want` generators remain (e.g. n = 2 has
    // no generators at all).
    for k in from..(gens.len() + 1).saturating_sub(want) {
        let next = acc.mul(&gens[k]);
        if !next.is_zero() {
            span_products(gens, k + 1, want - 1, &next, sink);
        }
    }
}

fn row_to_element(
    n: u32,
    degree: u32,
    row: &SparseRow,
    mono_basis: &[crate::arnold::NbcMonomial],
) -> AlgebraElement {
    let mut out = AlgebraElement::zero(n, degree);
    for (col, v) in row.iter() {
        out = out.add(&AlgebraElement::from_monomial(n, mono_basis[col].clone()).scale(v));
    }
    out
}
