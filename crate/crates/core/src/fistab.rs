//! Stability analytics for the three families of symmetric-group
//! representations produced by this crate: multiplicity tables across n
//! keyed by stable (unpadded) partition labels, stabilization-onset
//! detection, weight/length/alternating bound verdicts, and coinvariant
//! stabilization (stability-degree) checks.
//!
//! Conventions. An irreducible constituent of a degree-n representation is
//! the Specht module of a padded partition `lambda[n] = (n - |lambda|,
//! lambda)`; tables are keyed by the unpadded `lambda`, which is the label
//! that is constant across n once the family stabilizes. "Weight" bounds
//! `|lambda|`, "length" bounds the number of rows of the padded partition.
//! Coinvariants by the subgroup permuting `{a+1, ..., n}` are computed as
//! invariants (legitimate over characteristic-zero coefficients) via the
//! averaging projector.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_rational::BigRational;

use crate::arnold;
use crate::moduli::{moduli_character, shifted_character, ModuliError};
use crate::symgrp::classfn::{class_size, factorial, ClassFunction};
use crate::symgrp::decompose::{decompose, IrrDecomposition};
use crate::symgrp::partition::{partitions, CycleType, Partition};

/// The three representation families, each a sequence of S_n-modules:
/// configuration-space cohomology, its moduli direct summand in the
/// splitting (point n labels the space with n+1 marked points), and
/// genus-zero moduli cohomology itself.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// `H^i` of the configuration space of n ordered points in the plane.
    Configuration,
    /// At level n, `H^i` of the moduli of (n+1)-pointed rational curves
    /// with the S_n-action permuting the first n points.
    ShiftedModuli,
    /// `H^i` of the moduli of n-pointed rational curves.
    Moduli,
}

pub const FAMILIES: [Family; 3] = [
    Family::Configuration,
    Family::ShiftedModuli,
    Family::Moduli,
];

impl Family {
    /// Short name used on the command line and in serialized output.
    pub fn cli_name(self) -> &'static str {
        match self {
            Family::Configuration => "F",
            Family::ShiftedModuli => "Mshift",
            Family::Moduli => "M",
        }
    }

    /// Smallest n for which the level-n member is defined.
    pub fn min_points(self) -> u32 {
        match self {
            Family::Configuration => 1,
            Family::ShiftedModuli => 2, // level n describes an (n+1)-pointed space
            Family::Moduli => 3,
        }
    }

    /// The character of the level-n, degree-i member.
    pub fn character(self, n: u32, i: u32) -> Result<ClassFunction, ModuliError> {
        match self {
            Family::Configuration => {
                assert!(n >= 1, "configuration space needs at least one point");
                Ok(arnold::character(n, i))
            }
            Family::ShiftedModuli => {
                if n < 2 {
                    // Level n is an (n+1)-pointed moduli space.
                    return Err(ModuliError::TooFewPoints { n: n + 1 });
                }
                Ok(shifted_character(n, i)?.class_function().clone())
            }
            Family::Moduli => Ok(moduli_character(n, i)?.class_function().clone()),
        }
    }

    /// Every constituent label satisfies `|lambda| <= weight_bound(i)`.
    pub fn weight_bound(self, i: u32) -> u32 {
        match self {
            Family::Configuration | Family::ShiftedModuli => 2 * i,
            Family::Moduli => 2 * i + 1,
        }
    }

    /// Every padded constituent has at most `length_bound(i)` rows. In
    /// degree zero each family is the trivial module, so the bound is 1
    /// there; the sharp shifted-family bound 2i applies to positive
    /// degrees.
    pub fn length_bound(self, i: u32) -> u32 {
        match self {
            Family::Configuration | Family::Moduli => 2 * i + 1,
            Family::ShiftedModuli => (2 * i).max(1),
        }
    }

    /// The alternating representation cannot occur once n exceeds this
    /// (a consequence of the weight bound: its label (1^(n-1)) has size
    /// n - 1).
    pub fn alternating_threshold(self, i: u32) -> u32 {
        self.weight_bound(i) + 1
    }

    /// Range from which all multiplicity rows are expected constant.
    pub fn uniform_range_bound(self, i: u32) -> u32 {
        match self {
            // weight + stability degree for the configuration family
            Family::Configuration => 4 * i,
            Family::ShiftedModuli | Family::Moduli => 4 * i + 2,
        }
    }

    /// Coinvariant stability degree: S_a-coinvariant characters agree for
    /// n >= stability_degree_bound(i) + a.
    pub fn stability_degree_bound(self, i: u32) -> u32 {
        match self {
            Family::Configuration | Family::ShiftedModuli => 2 * i,
            Family::Moduli => 4 * i,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "F" => Ok(Family::Configuration),
            "Mshift" => Ok(Family::ShiftedModuli),
            "M" => Ok(Family::Moduli),
            other => Err(format!(
                "unknown family {other:?}; expected F, Mshift, or M"
            )),
        }
    }
}

/// Multiplicity table of one family in one cohomological degree across a
/// range of n, with stabilization and bound verdicts.
///
/// `rows[lambda][j]` is the multiplicity of the padded irreducible
/// `lambda[n]` at `n = n_min + j`, or `None` where `lambda[n]` is not a
/// partition (n too small). Verdicts are computed from the same data:
/// weight, length, and alternating-absence are per-n checks; `onset` is
/// the first sampled n from which every row is constant, provided at
/// least `stable_margin` further samples confirm it.
#[derive(Clone, Debug)]
pub struct StabilityReport {
    pub family: Family,
    pub i: u32,
    pub n_min: u32,
    pub n_max: u32,
    pub stable_margin: u32,
    pub rows: BTreeMap<Partition, Vec<Option<u64>>>,
    /// First sampled n from which every row is constant (margin honored);
    /// `None` when the sampled range never stabilizes or is too short.
    pub onset: Option<u32>,
    pub weight_bound: u32,
    pub weight_ok: bool,
    pub length_bound: u32,
    pub length_ok: bool,
    pub alternating_threshold: u32,
    pub alternating_ok: bool,
    /// Range from which constancy is guaranteed by the stability theory.
    pub range_bound: u32,
    /// Whether rows are constant on the sampled n >= range_bound; `None`
    /// when the sample does not reach the bound.
    pub range_ok: Option<bool>,
}

impl StabilityReport {
    pub fn sampled_ns(&self) -> impl Iterator<Item = u32> {
        self.n_min..=self.n_max
    }

    fn col(&self, n: u32) -> usize {
        (n - self.n_min) as usize
    }

    /// True when every row takes a single repeated value on the sampled
    /// n >= from (entries must exist, i.e. the label must be realizable).
    fn constant_from(&self, from: u32) -> bool {
        let from = from.max(self.n_min);
        if from > self.n_max {
            return true;
        }
        self.rows.values().all(|row| {
            let slice = &row[self.col(from)..];
            match slice.first() {
                None => true,
                Some(None) => false,
                Some(Some(first)) => slice.iter().all(|e| e.as_ref() == Some(first)),
            }
        })
    }

    /// Aligned-column text rendering.
    pub fn text_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "family {}  i={}  n={}..{}\n",
            self.family, self.i, self.n_min, self.n_max
        ));
        let mut widths: Vec<usize> = Vec::new();
        let mut header: Vec<String> = vec!["lambda".to_string()];
        header.extend(self.sampled_ns().map(|n| format!("n={n}")));
        let mut body: Vec<Vec<String>> = Vec::new();
        for (lambda, row) in &self.rows {
            let mut line = vec![lambda.to_string()];
            line.extend(row.iter().map(|e| match e {
                Some(m) => m.to_string(),
                None => "-".to_string(),
            }));
            body.push(line);
        }
        for line in std::iter::once(&header).chain(body.iter()) {
            for (k, cell) in line.iter().enumerate() {
                if widths.len() <= k {
                    widths.push(0);
                }
                widths[k] = widths[k].max(cell.len());
            }
        }
        for line in std::iter::once(&header).chain(body.iter()) {
            let rendered: Vec<String> = line
                .iter()
                .enumerate()
                .map(|(k, cell)| format!("{:>width$}", cell, width = widths[k]))
                .collect();
            out.push_str(&rendered.join("  "));
            out.push('\n');
        }
        out.push_str(&format!(
            "onset: {}  (expected constant from n >= {}: {})\n",
            match self.onset {
                Some(n) => n.to_string(),
                None => "not observed".to_string(),
            },
            self.range_bound,
            verdict_str(self.range_ok),
        ));
        out.push_str(&format!(
            "weight |lambda| <= {}: {}  length <= {}: {}  alternating absent for n > {}: {}\n",
            self.weight_bound,
            if self.weight_ok { "ok" } else { "VIOLATED" },
            self.length_bound,
            if self.length_ok { "ok" } else { "VIOLATED" },
            self.alternating_threshold,
            if self.alternating_ok { "ok" } else { "VIOLATED" },
        ));
        out
    }
}

fn verdict_str(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "ok",
        Some(false) => "VIOLATED",
        None => "range not sampled",
    }
}

/// Builds the multiplicity table for `family` in degree `i` over the
/// sampled range of n, with the default stabilization margin.
pub fn family_multiplicity_table(
    family: Family,
    i: u32,
    n_range: RangeInclusive<u32>,
    stable_margin: u32,
) -> Result<StabilityReport, ModuliError> {
    let (n_min, n_max) = (*n_range.start(), *n_range.end());
    assert!(n_min <= n_max, "empty sample range");
    let mut decs: Vec<(u32, IrrDecomposition)> = Vec::new();
    for n in n_range {
        let chi = family.character(n, i)?;
        let dec = decompose(&chi).map_err(|source| ModuliError::NotGenuine {
            n,
            i,
            source,
        })?;
        decs.push((n, dec));
    }

    // Collect stable labels and assemble rows.
    let mut labels: Vec<Partition> = Vec::new();
    for (_, dec) in &decs {
        for (padded, _) in dec.iter() {
            let label = padded.unpad();
            if !labels.contains(&label) {
                labels.push(label);
            }
        }
    }
    let mut rows: BTreeMap<Partition, Vec<Option<u64>>> = BTreeMap::new();
    for label in labels {
        let row: Vec<Option<u64>> = decs
            .iter()
            .map(|(n, dec)| label.pad(*n).ok().map(|padded| dec.mult(&padded)))
            .collect();
        rows.insert(label, row);
    }

    // Per-n bound verdicts.
    let weight_bound = family.weight_bound(i);
    let length_bound = family.length_bound(i);
    let alternating_threshold = family.alternating_threshold(i);
    let mut weight_ok = true;
    let mut length_ok = true;
    let mut alternating_ok = true;
    for (n, dec) in &decs {
        for (padded, _) in dec.iter() {
            weight_ok &= padded.unpad().size() <= weight_bound;
            length_ok &= padded.len() as u32 <= length_bound;
        }
        if *n > alternating_threshold {
            let alternating = Partition::new(vec![1; *n as usize]);
            alternating_ok &= dec.mult(&alternating) == 0;
        }
    }

    let mut report = StabilityReport {
        family,
        i,
        n_min,
        n_max,
        stable_margin,
        rows,
        onset: None,
        weight_bound,
        weight_ok,
        length_bound,
        length_ok,
        alternating_threshold,
        alternating_ok,
        range_bound: family.uniform_range_bound(i),
        range_ok: None,
    };
    report.onset = (n_min..=n_max)
        .find(|&n| report.constant_from(n))
        .filter(|&n| n_max - n >= stable_margin);
    report.range_ok = if n_max >= report.range_bound {
        Some(report.constant_from(report.range_bound))
    } else {
        None
    };
    Ok(report)
}

/// Multiplicity table for the n-pointed moduli family.
pub fn multiplicity_table(
    i: u32,
    n_range: RangeInclusive<u32>,
    stable_margin: u32,
) -> Result<StabilityReport, ModuliError> {
    family_multiplicity_table(Family::Moduli, i, n_range, stable_margin)
}

/// Multiplicity table for the shifted ((n+1)-pointed) moduli family.
pub fn shifted_multiplicity_table(
    i: u32,
    n_range: RangeInclusive<u32>,
    stable_margin: u32,
) -> Result<StabilityReport, ModuliError> {
    family_multiplicity_table(Family::ShiftedModuli, i, n_range, stable_margin)
}

/// The S_a-character of the coinvariants of `chi` by the subgroup
/// permuting `{a+1, ..., n}`: for a cycle type `nu` of S_a,
///
/// ```text
/// value(nu) = sum over mu of |class mu| / (n-a)! * chi(nu union mu)
/// ```
///
/// the average over the subgroup, which projects onto its invariants;
/// over characteristic-zero coefficients invariants and coinvariants are
/// naturally isomorphic, so this computes the coinvariant character.
pub fn coinvariant_character(chi: &ClassFunction, a: u32) -> ClassFunction {
    let n = chi.n();
    assert!(a <= n, "coinvariant truncation needs a <= n, got a = {a}, n = {n}");
    let b = n - a;
    let subgroup_order = factorial(b);
    ClassFunction::from_fn(a, |nu| {
        let mut acc = BigRational::from_integer(0.into());
        for mu in partitions(b) {
            let mu = CycleType::new(mu);
            let weight = BigRational::new(class_size(&mu), subgroup_order.clone());
            acc += weight * chi.value(&nu.union(&mu));
        }
        acc
    })
}

/// Caveat attached to every coinvariant-stability verdict.
pub const COINVARIANT_CAVEAT: &str = "equality of coinvariant characters is \
a necessary consequence of the stability isomorphisms; characters alone do \
not certify that the connecting maps themselves are isomorphisms";

/// One row of a coinvariant-stabilization table: the S_a-characters of
/// coinvariants across the sampled n, with the first sampled n from which
/// they are all equal and the verdict against the family's stability
/// degree.
#[derive(Clone, Debug)]
pub struct CoinvariantRow {
    pub a: u32,
    /// Characters are expected equal for n >= this (stability degree + a).
    pub threshold: u32,
    pub characters: Vec<(u32, ClassFunction)>,
    /// First sampled n such that all characters at sampled n' >= n agree.
    pub first_equal_from: Option<u32>,
    /// Whether all sampled characters at n >= threshold agree; `None` when
    /// fewer than two samples reach the threshold.
    pub bound_ok: Option<bool>,
}

/// Coinvariant-stabilization table for one family and degree.
#[derive(Clone, Debug)]
pub struct CoinvariantTable {
    pub family: Family,
    pub i: u32,
    pub a_max: u32,
    pub n_min: u32,
    pub n_max: u32,
    pub rows: Vec<CoinvariantRow>,
    /// Scope note: see [`COINVARIANT_CAVEAT`].
    pub note: &'static str,
}

/// For each a <= a_max, computes the S_a-coinvariant characters of the
/// family's degree-i members over the sampled n and checks that they
/// agree from the family's stability degree onward.
pub fn stability_degree_check(
    family: Family,
    i: u32,
    a_max: u32,
    n_range: RangeInclusive<u32>,
) -> Result<CoinvariantTable, ModuliError> {
    let (n_min, n_max) = (*n_range.start(), *n_range.end());
    assert!(n_min <= n_max, "empty sample range");
    let mut rows = Vec::new();
    for a in 0..=a_max {
        let threshold = family.stability_degree_bound(i) + a;
        let mut characters = Vec::new();
        for n in n_range.clone() {
            if n < a {
                continue;
            }
            characters.push((n, coinvariant_character(&family.character(n, i)?, a)));
        }
        let first_equal_from = characters
            .iter()
            .enumerate()
            .find(|(idx, _)| {
                characters[*idx..]
                    .windows(2)
                    .all(|w| w[0].1 == w[1].1)
            })
            .map(|(_, (n, _))| *n);
        let at_threshold: Vec<&ClassFunction> = characters
            .iter()
            .filter(|(n, _)| *n >= threshold)
            .map(|(_, c)| c)
            .collect();
        let bound_ok = if at_threshold.len() >= 2 {
            Some(at_threshold.windows(2).all(|w| w[0] == w[1]))
        } else {
            None
        };
        rows.push(CoinvariantRow {
            a,
            threshold,
            characters,
            first_equal_from,
            bound_ok,
        });
    }
    Ok(CoinvariantTable {
        family,
        i,
        a_max,
        n_min,
        n_max,
        rows,
        note: COINVARIANT_CAVEAT,
    })
}

/// Compatibility between the two moduli tables: restriction along
/// S_(n-1) < S_n of the n-pointed decomposition, computed by the
/// branching rule, must reproduce the shifted decomposition at level
/// n - 1.
pub fn cross_family_row_check(i: u32, n: u32) -> Result<(), ModuliError> {
    let plain = moduli_character(n, i)?;
    let shifted = shifted_character(n - 1, i)?;
    let plain_dec = decompose(plain.class_function()).map_err(|source| {
        ModuliError::NotGenuine { n, i, source }
    })?;
    let shifted_dec = decompose(shifted.class_function()).map_err(|source| {
        ModuliError::NotGenuine { n: n - 1, i, source }
    })?;
    let restricted = plain_dec.restrict_branch();
    assert_eq!(
        restricted, shifted_dec,
        "branching of the n-pointed decomposition must give the shifted one"
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli_degree_one_table_is_single_stable_row() {
        let report = multiplicity_table(1, 4..=10, 2).unwrap();
        assert_eq!(report.rows.len(), 1);
        let row = &report.rows[&Partition::new(vec![2])];
        assert_eq!(row, &vec![Some(1); 7]);
        assert_eq!(report.onset, Some(4));
        assert!(report.weight_ok && report.length_ok && report.alternating_ok);
        assert_eq!(report.range_bound, 6);
        assert_eq!(report.range_ok, Some(true));
        let text = report.text_table();
        assert!(text.contains("(2)"), "table text: {text}");
    }

    #[test]
    fn degree_zero_tables_are_trivial_rows() {
        for family in FAMILIES {
            let n_lo = family.min_points().max(3);
            let report =
                family_multiplicity_table(family, 0, n_lo..=n_lo + 4, 2).unwrap();
            assert_eq!(report.rows.len(), 1, "family {family}");
            assert_eq!(
                report.rows[&Partition::empty()],
                vec![Some(1); 5],
                "family {family}"
            );
            assert_eq!(report.onset, Some(n_lo));
            assert!(report.weight_ok && report.length_ok && report.alternating_ok);
        }
    }

    #[test]
    fn shifted_degree_one_table_has_two_rows() {
        let report = shifted_multiplicity_table(1, 4..=10, 2).unwrap();
        assert_eq!(report.rows.len(), 2);
        assert_eq!(report.rows[&Partition::new(vec![1])], vec![Some(1); 7]);
        assert_eq!(report.rows[&Partition::new(vec![2])], vec![Some(1); 7]);
        assert_eq!(report.onset, Some(4));
        assert_eq!(report.length_bound, 2);
        assert!(report.length_ok, "padded labels have at most two rows");
        assert!(report.weight_ok);
    }

    #[test]
    fn configuration_degree_one_has_unrealizable_entry() {
        // In degree 1 the configuration characters decompose as
        // trivial + standard + V(2); the V(2) label needs n >= 4.
        let report =
            family_multiplicity_table(Family::Configuration, 1, 3..=8, 2).unwrap();
        assert_eq!(report.rows.len(), 3);
        assert_eq!(report.rows[&Partition::empty()], vec![Some(1); 6]);
        assert_eq!(report.rows[&Partition::new(vec![1])], vec![Some(1); 6]);
        assert_eq!(
            report.rows[&Partition::new(vec![2])],
            vec![None, Some(1), Some(1), Some(1), Some(1), Some(1)]
        );
        // Stabilization begins once every label is realizable and constant.
        assert_eq!(report.onset, Some(4));
        assert_eq!(report.range_bound, 4);
        assert_eq!(report.range_ok, Some(true));
    }

    #[test]
    fn coinvariants_of_trivial_are_trivial() {
        for n in 2..7u32 {
            for a in 0..=n.min(3) {
                let co = coinvariant_character(&ClassFunction::trivial(n), a);
                assert_eq!(co, ClassFunction::trivial(a));
            }
        }
    }

    #[test]
    fn coinvariants_at_a_zero_are_trivial_multiplicity() {
        // a = 0 averages over all of S_n: the multiplicity of the trivial
        // representation. For the standard representation it is zero.
        let n = 5;
        let standard = crate::symgrp::irreducible_character(&Partition::new(vec![4, 1]));
        let co = coinvariant_character(&standard, 0);
        assert_eq!(co.value_at(0), &BigRational::from_integer(0.into()));
        let with_trivial = &standard + &ClassFunction::trivial(n);
        let co2 = coinvariant_character(&with_trivial, 0);
        assert_eq!(co2.value_at(0), &BigRational::from_integer(1.into()));
    }

    #[test]
    fn moduli_coinvariant_characters_stabilize() {
        let table = stability_degree_check(Family::Moduli, 1, 2, 4..=9).unwrap();
        assert_eq!(table.rows.len(), 3);
        for row in &table.rows {
            assert_eq!(row.threshold, 4 + row.a);
            assert_eq!(
                row.bound_ok,
                Some(true),
                "a = {}: characters {:?}",
                row.a,
                row.characters
            );
        }
        // The a = 2 coinvariants are the trivial S_2-module, constant in n:
        // the trivial subgroup-representation occurs once in the
        // restriction (one descending path (n-2,2) -> (n-2,1) -> (n-2)).
        let last = &table.rows[2];
        let stable: Vec<&ClassFunction> = last
            .characters
            .iter()
            .filter(|(n, _)| *n >= last.threshold)
            .map(|(_, c)| c)
            .collect();
        assert!(stable.len() >= 2);
        assert_eq!(stable[0], &ClassFunction::trivial(2));
    }

    #[test]
    fn shifted_coinvariant_characters_stabilize_early() {
        let table =
            stability_degree_check(Family::ShiftedModuli, 1, 2, 3..=8).unwrap();
        for row in &table.rows {
            assert_eq!(row.threshold, 2 + row.a);
            assert_eq!(row.bound_ok, Some(true), "a = {}", row.a);
        }
        assert_eq!(table.note, COINVARIANT_CAVEAT);
    }

    #[test]
    fn moduli_rows_restrict_to_shifted_rows() {
        for i in 0..=2 {
            for n in 5..=7 {
                cross_family_row_check(i, n).unwrap();
            }
        }
    }
}
