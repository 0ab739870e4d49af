//! The cohomology ring of the configuration space of n ordered points in
//! the plane, presented by degree-1 generators `w(a,b)` (for `1 <= a < b <= n`)
//! subject to anticommutativity and the three-term relations
//! `w(i,j)w(j,k) + w(j,k)w(i,k) + w(i,k)w(i,j) = 0`.
//!
//! Products of generators whose second indices are strictly increasing
//! ("no broken circuit" monomials) form a basis in each degree; every other
//! product is straightened onto that basis by a confluent rewriting step.
//! The symmetric group acts by relabelling points, and the trace of that
//! action on each graded piece gives the character computed here.

pub mod character;
pub mod element;
pub mod monomial;
pub mod oracle;

pub use character::character;
pub use element::AlgebraElement;
pub use monomial::{basis, Generator, NbcMonomial};
pub use oracle::{quotient_oracle, quotient_oracle_bounded, OracleBudgetError, OracleResult};
