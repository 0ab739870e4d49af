//! Exact computation of symmetric-group representations arising from
//! configuration spaces of the plane and from moduli of n-pointed
//! genus-zero curves, together with certification of their
//! representation-stability behaviour.
//!
//! Everything here is computed over exact arithmetic (`BigInt` /
//! `BigRational`); there is no floating point anywhere in the crate.
//! All public functions are deterministic: the same inputs produce the
//! same outputs, byte for byte, independent of thread scheduling.
//!
//! The crate is organised as a pipeline:
//!
//! * [`symgrp`] — partitions, cycle types, irreducible characters of the
//!   symmetric group (Murnaghan–Nakayama), and decomposition of class
//!   functions into irreducibles.
//! * [`arnold`] — the presentation of the cohomology of the configuration
//!   space of n ordered points in the plane by generators `w(a,b)` with
//!   the three-term relation, its normal-form basis, the symmetric-group
//!   action, and two independent cross-check oracles.
//! * [`moduli`] — characters of the cohomology of the moduli space of
//!   n-pointed genus-zero curves, obtained from the configuration-space
//!   characters by an exact transfer-matrix recursion.
//! * [`charpoly`] — character polynomials: evaluation, exact fitting from
//!   sampled characters, and the product/recursion identities they satisfy.
//! * [`fistab`] — stability analytics: multiplicity tables across n,
//!   weight/length bounds, coinvariant stabilization, and onset detection.
//! * [`verify`] — a self-check battery wiring the independent oracles
//!   against the production pipeline.

pub mod arnold;
pub mod charpoly;
pub mod fistab;
pub mod linalg;
pub mod moduli;
pub mod symgrp;
pub mod verify;

pub use symgrp::classfn::ClassFunction;
pub use symgrp::partition::{CycleType, Partition};
