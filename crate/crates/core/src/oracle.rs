//! Brute-force ground truth for the structural results: an exhaustive
//! census of idempotent matrices, rank by fraction-free elimination, and
//! subalgebra comparison by generating the exponent monoids.
//!
//! Nothing here calls the column characterization or the `Γ` machinery;
//! the checks in this module are only as good as their independence.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::ExponentMatrix;

/// Hard limit on the number of candidate matrices a census may scan.
pub const CENSUS_CAP: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub matrix: ExponentMatrix,
    /// No zero row.
    pub nondegenerate: bool,
    /// Non-increasing diagonal.
    pub standard: bool,
}

/// All idempotent `n x n` matrices with entries in `0..=bound`, sorted by
/// flattened entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub n: usize,
    pub bound: u64,
    pub entries: Vec<CensusEntry>,
}

impl Census {
    pub fn matrices(&self) -> impl Iterator<Item = &ExponentMatrix> {
        self.entries.iter().map(|e| &e.matrix)
    }

    pub fn nondegenerate(&self) -> impl Iterator<Item = &ExponentMatrix> {
        self.entries
            .iter()
            .filter(|e| e.nondegenerate)
            .map(|e| &e.matrix)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Line-oriented text form: a `census` header, then one block per
    /// matrix (a `matrix` line with its flags followed by its rows).
    pub fn render(&self) -> String {
        let mut out = format!(
            "census n={} bound={} count={}\n",
            self.n,
            self.bound,
            self.entries.len()
        );
        for (k, e) in self.entries.iter().enumerate() {
            let _ = writeln!(
                out,
                "\nmatrix {} nondegenerate={} standard={}",
                k + 1,
                e.nondegenerate,
                e.standard
            );
            out.push_str(&e.matrix.to_string());
        }
        out
    }

    pub fn parse(text: &str) -> Result<Census> {
        let bad = |msg: &str| Error::InvalidMatrix(format!("census: {msg}"));
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| bad("empty input"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let field = |name: &str| -> Result<u64> {
            fields
                .iter()
                .find_map(|f| f.strip_prefix(name)?.strip_prefix('='))
                .ok_or_else(|| bad(&format!("missing {name}")))?
                .parse()
                .map_err(|_| bad(&format!("bad {name}")))
        };
        if fields.first() != Some(&"census") {
            return Err(bad("missing header"));
        }
        let (n, bound, count) = (field("n")? as usize, field("bound")?, field("count")?);
        let mut entries = Vec::new();
        while let Some(line) = lines.next() {
            let flag = |name: &str| line.contains(&format!("{name}=true"));
            if !line.starts_with("matrix") {
                return Err(bad("expected a matrix block"));
            }
            let (nondegenerate, standard) = (flag("nondegenerate"), flag("standard"));
            let mut rows = Vec::with_capacity(n);
            for _ in 0..n {
                let row = lines.next().ok_or_else(|| bad("truncated block"))?;
                let row: Vec<u64> = row
                    .split_whitespace()
                    .map(str::parse)
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| bad("bad entry"))?;
                rows.push(row);
            }
            entries.push(CensusEntry {
                matrix: ExponentMatrix::from_rows(&rows)?,
                nondegenerate,
                standard,
            });
        }
        if entries.len() as u64 != count {
            return Err(bad("count does not match the number of blocks"));
        }
        Ok(Census { n, bound, entries })
    }
}

fn search_space(n: usize, bound: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidMatrix("size must be at least 1".into()));
    }
    let base = bound as u128 + 1;
    let mut total: u128 = 1;
    for _ in 0..n * n {
        total = total.saturating_mul(base);
        if total > CENSUS_CAP {
            return Err(Error::SearchSpaceTooLarge {
                candidates: total,
                cap: CENSUS_CAP,
            });
        }
    }
    Ok(total as u64)
}

fn decode(mut index: u64, n: usize, base: u64) -> Vec<u64> {
    let mut digits = vec![0; n * n];
    for d in digits.iter_mut().rev() {
        *d = index % base;
        index /= base;
    }
    digits
}

/// `A * A == A` by schoolbook multiplication; overflow means "no".
fn squares_to_itself(a: &[u64], n: usize) -> bool {
    for i in 0..n {
        for j in 0..n {
            let mut acc: u128 = 0;
            for k in 0..n {
                acc += a[i * n + k] as u128 * a[k * n + j] as u128;
            }
            if acc != a[i * n + j] as u128 {
                return false;
            }
        }
    }
    true
}

fn scan(n: usize, bound: u64, prune: bool) -> Result<Vec<ExponentMatrix>> {
    let total = search_space(n, bound)?;
    let base = bound + 1;
    let mut found: Vec<Vec<u64>> = (0..total)
        .into_par_iter()
        .filter_map(|index| {
            let a = decode(index, n, base);
            // a diagonal entry d satisfies d = d^2 + (non-negative), so d <= 1
            if prune && (0..n).any(|i| a[i * n + i] > 1) {
                return None;
            }
            squares_to_itself(&a, n).then_some(a)
        })
        .collect();
    found.sort();
    found
        .into_iter()
        .map(|entries| ExponentMatrix::new(n, entries))
        .collect()
}

/// Exhaustive census of idempotent matrices.
pub fn enumerate_idempotent(n: usize, bound: u64) -> Result<Census> {
    let entries = scan(n, bound, true)?
        .into_iter()
        .map(|matrix| {
            let nondegenerate = (0..n).all(|i| matrix.row(i).iter().any(|&a| a != 0));
            let standard = (1..n).all(|i| matrix.get(i - 1, i - 1) >= matrix.get(i, i));
            CensusEntry {
                matrix,
                nondegenerate,
                standard,
            }
        })
        .collect();
    Ok(Census { n, bound, entries })
}

/// The same census without the diagonal pruning; used to check that
/// pruning drops nothing.
pub fn enumerate_idempotent_unpruned(n: usize, bound: u64) -> Result<Vec<ExponentMatrix>> {
    scan(n, bound, false)
}

/// Rank over the rationals by Bareiss fraction-free elimination.
pub fn rational_rank(m: &ExponentMatrix) -> usize {
    let n = m.n();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| m.row(i).iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..n {
            for c in col + 1..n {
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}

/// Default truncation for [`monoid_same_image`].
pub fn default_degree_cap(bound: u64, n: usize) -> u64 {
    3 * bound * n as u64
}

/// The additive monoid generated by `generators`, truncated to vectors of
/// coordinate sum at most `cap`, by breadth-first search from zero.
pub fn truncated_monoid(generators: &[Vec<u64>], dim: usize, cap: u64) -> HashSet<Vec<u64>> {
    let start = vec![0u64; dim];
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 0u64)]);
    while let Some((v, sum)) = queue.pop_front() {
        for g in generators {
            let next_sum = sum + g.iter().sum::<u64>();
            if next_sum > cap {
                continue;
            }
            let next: Vec<u64> = v.iter().zip(g).map(|(a, b)| a + b).collect();
            if seen.insert(next.clone()) {
                queue.push_back((next, next_sum));
            }
        }
    }
    seen
}

fn nonzero_columns(m: &ExponentMatrix) -> Vec<Vec<u64>> {
    (0..m.n())
        .map(|j| m.column(j))
        .filter(|c| c.iter().any(|&x| x != 0))
        .collect()
}

/// Whether the nonzero columns of each matrix lie in the monoid generated
/// by the nonzero columns of the other, with both monoids truncated at
/// coordinate sum `degree_cap`.
pub fn monoid_same_image(a: &ExponentMatrix, b: &ExponentMatrix, degree_cap: u64) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    let (ca, cb) = (nonzero_columns(a), nonzero_columns(b));
    let within = |gens: &[Vec<u64>], targets: &[Vec<u64>]| {
        let monoid = truncated_monoid(gens, a.n(), degree_cap);
        // a generator is a member regardless of the truncation
        targets
            .iter()
            .all(|t| gens.contains(t) || monoid.contains(t))
    };
    Ok(within(&ca, &cb) && within(&cb, &ca))
}
