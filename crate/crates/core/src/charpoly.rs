//! Character polynomials: integer-valued polynomial expressions in the
//! cycle-count functions `X_k` (number of k-cycles) that give the values
//! of a whole family of class functions uniformly in n.
//!
//! Polynomials are stored in the binomial basis: a term with exponent
//! vector `(e_1, ..., e_r)` denotes `prod_k binom(X_k, e_k)` and has
//! degree `sum_k k * e_k` (each k-cycle counts k). The binomial basis is
//! the natural one for integer-valued polynomials and is what the exact
//! fitter produces; products are computed by passing through the ordinary
//! power basis with Stirling-number conversions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::{solve_exact, SparseRow};
use crate::symgrp::classfn::{classes, rational_str, ClassFunction};
use crate::symgrp::partition::CycleType;

/// A polynomial in the cycle-count functions `X_1, X_2, ...` over exact
/// rationals, stored in the binomial basis. Keys are exponent vectors with
/// trailing zeros stripped; the empty vector is the constant term.
#[derive(Clone, PartialEq, Eq)]
pub struct CharacterPolynomial {
    terms: BTreeMap<Vec<u32>, BigRational>,
}

fn strip(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl CharacterPolynomial {
    pub fn zero() -> Self {
        CharacterPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The variable `X_k` (k >= 1), i.e. `binom(X_k, 1)`.
    pub fn x(k: u32) -> Self {
        assert!(k >= 1, "cycle-count variables are X_1, X_2, ...");
        let mut e = vec![0u32; k as usize];
        e[k as usize - 1] = 1;
        let mut p = Self::zero();
        p.add_term(e, BigRational::one());
        p
    }

    /// The monomial `prod_k binom(X_k, exps[k-1])` with coefficient `c`.
    pub fn binomial_monomial(exps: Vec<u32>, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(strip(exps), c);
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(strip(e)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    /// Weighted degree: a k-cycle variable counts k.
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| weighted_degree(e))
            .max()
            .unwrap_or(0)
    }

    /// Largest k such that `X_k` occurs (0 for constants).
    pub fn cycle_support_bound(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.len() as u32)
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        CharacterPolynomial {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product, computed through the power basis (exact).
    pub fn mul(&self, other: &Self) -> Self {
        let a = self.to_power_basis();
        let b = other.to_power_basis();
        let mut prod: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let mut e = vec![0u32; ea.len().max(eb.len())];
                for (k, &v) in ea.iter().enumerate() {
                    e[k] += v;
                }
                for (k, &v) in eb.iter().enumerate() {
                    e[k] += v;
                }
                let c = ca * cb;
                let entry = prod.entry(strip(e)).or_insert_with(BigRational::zero);
                *entry += c;
            }
        }
        prod.retain(|_, c| !c.is_zero());
        Self::from_power_basis(&prod)
    }

    /// Evaluates on a cycle type by substituting the cycle multiplicities.
    pub fn eval(&self, mu: &CycleType) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (k, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let m = mu.multiplicity(k as u32 + 1);
                term *= BigRational::from(binomial_u32(m, exp));
                if term.is_zero() {
                    break;
                }
            }
            acc += term;
        }
        acc
    }

    /// The class function on S_n obtained by evaluating on every class.
    pub fn class_function(&self, n: u32) -> ClassFunction {
        ClassFunction::from_fn(n, |mu| self.eval(mu))
    }

    /// Expansion in the ordinary power basis `prod X_k^(e_k)`.
    fn to_power_basis(&self) -> BTreeMap<Vec<u32>, BigRational> {
        let mut out: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (e, c) in &self.terms {
            // Expand each variable's binomial factor and cross-multiply.
            let mut partial: Vec<(Vec<u32>, BigRational)> =
                vec![(Vec::new(), c.clone())];
            for (k, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let factor = binomial_in_powers(exp);
                let mut next = Vec::with_capacity(partial.len() * factor.len());
                for (pe, pc) in &partial {
                    for (deg, fc) in &factor {
                        let mut ne = pe.clone();
                        if ne.len() < k + 1 {
                            ne.resize(k + 1, 0);
                        }
                        ne[k] += deg;
                        next.push((ne, pc * fc));
                    }
                }
                partial = next;
            }
            for (pe, pc) in partial {
                let entry = out.entry(strip(pe)).or_insert_with(BigRational::zero);
                *entry += pc;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Rebuilds a polynomial in the binomial basis from power-basis terms.
    fn from_power_basis(power: &BTreeMap<Vec<u32>, BigRational>) -> Self {
        let mut out = Self::zero();
        for (e, c) in power {
            let mut partial: Vec<(Vec<u32>, BigRational)> =
                vec![(Vec::new(), c.clone())];
            for (k, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let factor = power_in_binomials(exp);
                let mut next = Vec::with_capacity(partial.len() * factor.len());
                for (pe, pc) in &partial {
                    for (m, fc) in &factor {
                        let mut ne = pe.clone();
                        if ne.len() < k + 1 {
                            ne.resize(k + 1, 0);
                        }
                        ne[k] += m;
                        next.push((ne, pc * fc));
                    }
                }
                partial = next;
            }
            for (pe, pc) in partial {
                out.add_term(pe, pc);
            }
        }
        out
    }
}

fn weighted_degree(e: &[u32]) -> u32 {
    e.iter()
        .enumerate()
        .map(|(k, &v)| (k as u32 + 1) * v)
        .sum()
}

/// `binom(m, k)` for machine-size inputs, exactly.
pub fn binomial_u32(m: u32, k: u32) -> BigInt {
    if k > m {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= BigInt::from(m - j);
        den *= BigInt::from(j + 1);
    }
    num / den
}

/// `binom(X, e)` as power-basis coefficients: `(degree, coefficient)` with
/// `binom(X, e) = (1/e!) X(X-1)...(X-e+1)`, via signed Stirling numbers of
/// the first kind.
fn binomial_in_powers(e: u32) -> Vec<(u32, BigRational)> {
    // Falling factorial coefficients: x(x-1)...(x-e+1) = sum s(e,j) x^j.
    let mut coeffs: Vec<BigInt> = vec![BigInt::one()]; // polynomial "1"
    for t in 0..e {
        // multiply by (x - t)
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * BigInt::from(t);
        }
        coeffs = next;
    }
    let efact: BigInt = (1..=e).map(BigInt::from).product::<BigInt>().max(BigInt::one());
    coeffs
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (j as u32, BigRational::new(c, efact.clone())))
        .collect()
}

/// `X^e` in the binomial basis: `(m, coefficient)` pairs with
/// `X^e = sum_m S2(e, m) * m! * binom(X, m)` (Stirling numbers of the
/// second kind).
fn power_in_binomials(e: u32) -> Vec<(u32, BigRational)> {
    let e = e as usize;
    // S2 via the triangle S2(n,k) = k*S2(n-1,k) + S2(n-1,k-1).
    let mut s2 = vec![vec![BigInt::zero(); e + 1]; e + 1];
    s2[0][0] = BigInt::one();
    for n in 1..=e {
        for k in 1..=n {
            s2[n][k] = BigInt::from(k as u32) * &s2[n - 1][k] + &s2[n - 1][k - 1];
        }
    }
    let mut fact = BigInt::one();
    let mut out = Vec::new();
    for m in 0..=e {
        if m > 0 {
            fact *= BigInt::from(m as u32);
        }
        let c = &s2[e][m] * &fact;
        if !c.is_zero() {
            out.push((m as u32, BigRational::from(c)));
        }
    }
    out
}

impl fmt::Display for CharacterPolynomial {
    /// Canonical rendering: terms by decreasing weighted degree, ties by
    /// decreasing exponent vector; factors as `Xk` or `binom(Xk,e)` joined
    /// with `*`; unit coefficients elided except on the constant term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            weighted_degree(b)
                .cmp(&weighted_degree(a))
                .then_with(|| b.cmp(a))
        });
        for (idx, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (k, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if exp == 1 {
                    factors.push(format!("X{}", k + 1));
                } else {
                    factors.push(format!("binom(X{},{})", k + 1, exp));
                }
            }
            if factors.is_empty() {
                write!(f, "{}", rational_str(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", rational_str(&mag))?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CharacterPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A successful fit: the polynomial plus the dimension of the ambiguity
/// (the space of degree-bounded polynomials vanishing on all samples).
pub struct Fit {
    pub poly: CharacterPolynomial,
    pub nullity: usize,
}

#[derive(Debug, Clone, Error)]
pub enum FitError {
    #[error(
        "no degree-<= {degree} character polynomial fits the samples: \
         at n = {n}, class {mu}, the sample value is {expected} but the \
         best candidate gives {got}"
    )]
    Inconsistent {
        degree: u32,
        n: u32,
        mu: String,
        expected: String,
        got: String,
    },
}

/// All exponent vectors of weighted degree at most d, in a fixed order.
fn monomials_of_degree_at_most(d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(k: u32, budget: u32, d: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k > d {
            out.push(strip(current.clone()));
            return;
        }
        let max_e = budget / k;
        for e in 0..=max_e {
            current.push(e);
            rec(k + 1, budget - k * e, d, current, out);
            current.pop();
        }
    }
    rec(1, d, d, &mut current, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Fits a single character polynomial of weighted degree at most `degree`
/// to every value of every sampled class function simultaneously, exactly.
///
/// On failure returns a concrete witness: a sampled class where no
/// degree-bounded polynomial can match.
pub fn fit(samples: &[ClassFunction], degree: u32) -> Result<Fit, FitError> {
    let monomials = monomials_of_degree_at_most(degree);
    let ncols = monomials.len();
    let mut rows: Vec<(SparseRow, BigRational)> = Vec::new();
    for chi in samples {
        let data = classes(chi.n());
        for (idx, mu) in data.types().iter().enumerate() {
            let entries: Vec<(usize, BigRational)> = monomials
                .iter()
                .enumerate()
                .map(|(col, e)| {
                    let mut v = BigRational::one();
                    for (k, &exp) in e.iter().enumerate() {
                        if exp > 0 {
                            v *= BigRational::from(binomial_u32(
                                mu.multiplicity(k as u32 + 1),
                                exp,
                            ));
                        }
                    }
                    (col, v)
                })
                .filter(|(_, v)| !v.is_zero())
                .collect();
            rows.push((
                SparseRow::from_entries(entries),
                chi.value_at(idx).clone(),
            ));
        }
    }
    let solution = solve_exact(rows, ncols);
    let mut poly = CharacterPolynomial::zero();
    for (col, c) in solution.values.iter().enumerate() {
        if !c.is_zero() {
            poly.add_term(monomials[col].clone(), c.clone());
        }
    }
    if !solution.consistent {
        // Locate a concrete witness class for the error message.
        for chi in samples {
            let data = classes(chi.n());
            for (idx, mu) in data.types().iter().enumerate() {
                let got = poly.eval(mu);
                if &got != chi.value_at(idx) {
                    return Err(FitError::Inconsistent {
                        degree,
                        n: chi.n(),
                        mu: mu.to_string(),
                        expected: rational_str(chi.value_at(idx)),
                        got: rational_str(&got),
                    });
                }
            }
        }
        unreachable!("inconsistent solve must leave a mismatched sample");
    }
    Ok(Fit {
        poly,
        nullity: solution.nullity,
    })
}

#[derive(Debug, Clone, Error)]
pub enum RecursionIdentityError {
    #[error(
        "transfer recursion violated at step {i}: expected Q_{i} = P_{i} - (X1 - 1)*Q_{}, \
         lhs = {lhs}, rhs = {rhs}",
        .i - 1
    )]
    Mismatch { i: u32, lhs: String, rhs: String },
    #[error("degree bound violated: {which} has weighted degree {got}, allowed {allowed}")]
    DegreeBound {
        which: String,
        got: u32,
        allowed: u32,
    },
}

/// Verifies the polynomial-level transfer recursion
/// `q_i = p_i - (X1 - 1) * q_prev` exactly in the binomial basis, along
/// with the degree bounds `deg q_i <= 2i` and `deg p_i <= 2i`.
pub fn verify_rec_identity(
    i: u32,
    p_i: &CharacterPolynomial,
    q_i: &CharacterPolynomial,
    q_prev: &CharacterPolynomial,
) -> Result<(), RecursionIdentityError> {
    assert!(i >= 1, "recursion step needs i >= 1");
    for (which, poly) in [("P", p_i), ("Q", q_i)] {
        if poly.degree() > 2 * i {
            return Err(RecursionIdentityError::DegreeBound {
                which: format!("{which}_{i}"),
                got: poly.degree(),
                allowed: 2 * i,
            });
        }
    }
    let x1_minus_1 = CharacterPolynomial::x(1).sub(&CharacterPolynomial::one());
    let rhs = p_i.sub(&x1_minus_1.mul(q_prev));
    if q_i != &rhs {
        return Err(RecursionIdentityError::Mismatch {
            i,
            lhs: q_i.to_string(),
            rhs: rhs.to_string(),
        });
    }
    Ok(())
}

/// Checks that the polynomial only involves short cycle counts
/// `X_1, ..., X_bound`; on failure returns a violating monomial rendered
/// as text. Equivalently, evaluation depends only on the multiplicities
/// of cycles of length at most `bound`.
pub fn short_cycle_dependence(
    p: &CharacterPolynomial,
    bound: u32,
) -> Result<(), String> {
    for (e, c) in p.terms() {
        if e.len() as u32 > bound {
            let witness =
                CharacterPolynomial::binomial_monomial(e.clone(), c.clone());
            return Err(witness.to_string());
        }
    }
    Ok(())
}

/// True when every stored coefficient is an integer. Characters of genuine
/// representations are integer-valued, and in the binomial basis their
/// fitted polynomials are expected (but not required) to have integer
/// coefficients.
pub fn has_integer_coefficients(p: &CharacterPolynomial) -> bool {
    p.terms().all(|(_, c)| c.is_integer())
}

/// Exact evaluation of the unique degree < points.len() interpolating
/// polynomial through `points` at `x0` (Lagrange form). Panics on repeated
/// x-coordinates.
pub fn lagrange_eval(points: &[(BigRational, BigRational)], x0: &BigRational) -> BigRational {
    let mut total = BigRational::zero();
    for (j, (xj, yj)) in points.iter().enumerate() {
        let mut weight = BigRational::one();
        for (l, (xl, _)) in points.iter().enumerate() {
            if l == j {
                continue;
            }
            let den = xj - xl;
            assert!(!den.is_zero(), "repeated x-coordinate in interpolation");
            weight *= (x0 - xl) / den;
        }
        total += yj * weight;
    }
    total
}
