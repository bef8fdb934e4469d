//! Monic monomial retractions that share a retract.
//!
//! Two non-degenerate monic retractions have the same image exactly when
//! their exponent matrices have the same nonzero columns. Starting from `M`
//! with nonzero columns `C_{i_1}, .., C_{i_p}`, every other matrix with the
//! same image puts `C_{i_j}` at some position of `Γ_j`: the rows `l` where
//! `C_{i_j}` has a 1 and row `l` of `M` has no other nonzero entry.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::ExponentMatrix;

/// Nonzero columns of `M` (increasing, 0-based) and the landing set of
/// each.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaSets {
    pub nonzero_columns: Vec<usize>,
    pub gamma: Vec<Vec<usize>>,
}

fn check_nondegenerate_idempotent(m: &ExponentMatrix) -> Result<()> {
    if !m.is_idempotent()? {
        return Err(Error::NotIdempotent);
    }
    if let Some(i) = m.first_zero_row() {
        return Err(Error::ZeroRow(i + 1));
    }
    Ok(())
}

pub fn gamma_sets(m: &ExponentMatrix) -> Result<GammaSets> {
    check_nondegenerate_idempotent(m)?;
    let n = m.n();
    let single_entry_row = |l: usize| m.row(l).iter().filter(|&&a| a != 0).count() == 1;
    let nonzero_columns = m.nonzero_columns();
    let gamma = nonzero_columns
        .iter()
        .map(|&c| {
            (0..n)
                .filter(|&l| m.get(l, c) == 1 && single_entry_row(l))
                .collect()
        })
        .collect();
    Ok(GammaSets {
        nonzero_columns,
        gamma,
    })
}

/// Number of monic retractions with the same retract as `m`, including
/// `m` itself: the product of the `Γ_j` sizes.
pub fn count_same_retract(m: &ExponentMatrix) -> Result<u64> {
    let sets = gamma_sets(m)?;
    sets.gamma.iter().try_fold(1u64, |acc, g| {
        acc.checked_mul(g.len() as u64).ok_or(Error::CountOverflow)
    })
}

fn place_columns(m: &ExponentMatrix, sources: &[usize], targets: &[usize]) -> ExponentMatrix {
    let mut out = ExponentMatrix::zero(m.n());
    for (&src, &dst) in sources.iter().zip(targets) {
        for i in 0..m.n() {
            out.set(i, dst, m.get(i, src));
        }
    }
    out
}

/// Every matrix with the same retract as `m`, sorted by flattened entries.
pub fn enumerate_same_retract(m: &ExponentMatrix) -> Result<Vec<ExponentMatrix>> {
    let sets = gamma_sets(m)?;
    let mut out: Vec<ExponentMatrix> = sets
        .gamma
        .iter()
        .map(|g| g.iter().copied())
        .multi_cartesian_product()
        .map(|targets| place_columns(m, &sets.nonzero_columns, &targets))
        .collect();
    // `multi_cartesian_product` of zero factors yields nothing; p >= 1 here
    // because a nondegenerate matrix is nonzero.
    out.sort_by(|a, b| a.entries().cmp(b.entries()));
    out.dedup();
    Ok(out)
}

fn sorted_nonzero_columns(m: &ExponentMatrix) -> Vec<Vec<u64>> {
    m.nonzero_columns()
        .into_iter()
        .map(|j| m.column(j))
        .sorted()
        .collect()
}

/// Whether two non-degenerate monic retractions have the same retract,
/// decided by comparing their nonzero columns as multisets.
pub fn same_image(a: &ExponentMatrix, b: &ExponentMatrix) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    check_nondegenerate_idempotent(a)?;
    check_nondegenerate_idempotent(b)?;
    Ok(sorted_nonzero_columns(a) == sorted_nonzero_columns(b))
}
