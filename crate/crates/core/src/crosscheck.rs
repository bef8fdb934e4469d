//! Cross-validation of the structural operations against the oracle for
//! one `(n, bound)` cell. Backs the `oracle-check` command.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::domain::Domain;
use crate::error::Result;
use crate::matrix::ExponentMatrix;
use crate::oracle::{self, Census};
use crate::same_retract::{count_same_retract, enumerate_same_retract, same_image};
use crate::structure::polynomial_ring_witness;
use crate::transform::{conjugate, has_block_form, is_standard, standardize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub checked: u64,
    pub mismatches: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheckSummary {
    pub n: usize,
    pub bound: u64,
    pub degree_cap: u64,
    pub census_size: usize,
    pub nondegenerate: usize,
    pub checks: Vec<CheckResult>,
}

impl CrossCheckSummary {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.mismatches == 0)
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    mismatches: u64,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        self.checked += 1;
        if !ok {
            self.mismatches += 1;
        }
    }

    fn finish(self, name: &'static str) -> CheckResult {
        CheckResult {
            name,
            checked: self.checked,
            mismatches: self.mismatches,
        }
    }
}

/// Every `n x n` matrix with entries in `0..=bound`, in lexicographic order.
pub fn all_matrices(n: usize, bound: u64) -> impl Iterator<Item = ExponentMatrix> {
    itertools::Itertools::multi_cartesian_product((0..n * n).map(move |_| 0..=bound))
        .map(move |entries| ExponentMatrix::new(n, entries).expect("n*n entries"))
}

pub fn cross_validate(n: usize, bound: u64, degree_cap: Option<u64>) -> Result<CrossCheckSummary> {
    let census = oracle::enumerate_idempotent(n, bound)?;
    let degree_cap = degree_cap.unwrap_or_else(|| oracle::default_degree_cap(bound, n));
    let nondegenerate: Vec<&ExponentMatrix> = census.nondegenerate().collect();
    let mut checks = Vec::new();

    let mut characterization = Tally::default();
    let mut correspondence = Tally::default();
    for m in all_matrices(n, bound) {
        let idempotent = m.is_idempotent()?;
        if m.is_nondegenerate() {
            characterization.record(m.characterize_nonzero_rows()? == idempotent);
        }
        let map = m.to_monic_map(Domain::Integers);
        let round_trip = ExponentMatrix::from_monic_map(&map)? == m;
        correspondence.record(round_trip && map.is_retraction() == idempotent);
    }
    checks.push(characterization.finish("column characterization equals idempotency"));
    checks.push(correspondence.finish("retraction iff idempotent exponent matrix"));

    let mut clauses = Tally::default();
    let mut rank = Tally::default();
    let mut standard = Tally::default();
    for m in census.matrices() {
        clauses.record(m.structure_report().all_hold());
        rank.record(oracle::rational_rank(m) as u64 == m.trace());
        let (s, sigma) = standardize(m)?;
        let mut ok = is_standard(&s) && s.is_idempotent()? && conjugate(m, &sigma)? == s;
        if m.is_nondegenerate() {
            ok &= has_block_form(&s);
        }
        standard.record(ok);
    }
    checks.push(clauses.finish("structure clauses hold on the census"));
    checks.push(rank.finish("rational rank equals trace"));
    checks.push(standard.finish("standardization"));

    let mut witness = Tally::default();
    let mut counting = Tally::default();
    for &m in &nondegenerate {
        let (s, _) = standardize(m)?;
        let w = polynomial_ring_witness(&s, Domain::Integers)?;
        witness.record(w.verified && w.p as u64 == m.trace());
        counting.record(count_matches_census(m, &census)?);
    }
    checks.push(witness.finish("polynomial ring witness"));
    checks.push(counting.finish("same-retract enumeration matches the census"));

    let mut monoid = Tally::default();
    for &a in &nondegenerate {
        for &b in &nondegenerate {
            monoid.record(oracle::monoid_same_image(a, b, degree_cap)? == same_image(a, b)?);
        }
    }
    checks.push(monoid.finish("monoid generation agrees with column comparison"));

    Ok(CrossCheckSummary {
        n,
        bound,
        degree_cap,
        census_size: census.len(),
        nondegenerate: nondegenerate.len(),
        checks,
    })
}

/// `|enumerate(M)| = count(M)` and the enumeration equals the census
/// members with the same image.
fn count_matches_census(m: &ExponentMatrix, census: &Census) -> Result<bool> {
    let listed: BTreeSet<ExponentMatrix> = enumerate_same_retract(m)?.into_iter().collect();
    let mut from_census = BTreeSet::new();
    for other in census.nondegenerate() {
        if same_image(m, other)? {
            from_census.insert(other.clone());
        }
    }
    let count = count_same_retract(m)?;
    Ok(listed.len() as u64 == count && listed == from_census && listed.contains(m))
}
