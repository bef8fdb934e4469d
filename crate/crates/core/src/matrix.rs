//! Exponent matrices of monic monomial maps.
//!
//! Entry `(i, j)` is the exponent of `X_{i+1}` in the image of `X_{j+1}`,
//! so the image of each variable runs down its column. A monic map with no
//! zero image is a retraction exactly when its exponent matrix is
//! idempotent.

use std::fmt;

use serde::Serialize;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::monomial::{Image, Monomial, MonomialMap};

/// Square matrix of non-negative integers, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentMatrix {
    n: usize,
    entries: Vec<u64>,
}

impl ExponentMatrix {
    pub fn new(n: usize, entries: Vec<u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMatrix("size must be at least 1".into()));
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: entries.len(),
            });
        }
        Ok(ExponentMatrix { n, entries })
    }

    pub fn from_rows<R: AsRef<[u64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!(
                    "row of length {} in a {n}x{n} matrix",
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        Self::new(n, entries)
    }

    pub fn zero(n: usize) -> Self {
        ExponentMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.entries[row * self.n + col]
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, value: u64) {
        self.entries[row * self.n + col] = value;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn diagonal(&self) -> Vec<u64> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    pub fn trace(&self) -> u64 {
        self.diagonal().iter().sum()
    }

    pub fn max_entry(&self) -> u64 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    pub fn is_zero_column(&self, j: usize) -> bool {
        (0..self.n).all(|i| self.get(i, j) == 0)
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.row(i).iter().all(|&a| a == 0)
    }

    /// Indices of the nonzero columns, increasing.
    pub fn nonzero_columns(&self) -> Vec<usize> {
        (0..self.n).filter(|&j| !self.is_zero_column(j)).collect()
    }

    pub fn first_zero_row(&self) -> Option<usize> {
        (0..self.n).find(|&i| self.is_zero_row(i))
    }

    /// Every row is nonzero, i.e. the associated map is non-degenerate.
    pub fn is_nondegenerate(&self) -> bool {
        self.first_zero_row().is_none()
    }

    pub fn checked_mul(&self, other: &ExponentMatrix) -> Result<ExponentMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    let term = self
                        .get(i, k)
                        .checked_mul(other.get(k, j))
                        .ok_or(Error::ExponentOverflow)?;
                    acc = acc.checked_add(term).ok_or(Error::ExponentOverflow)?;
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn is_idempotent(&self) -> Result<bool> {
        Ok(self.checked_mul(self)? == *self)
    }

    /// Exponent matrix of a monic map without zero images. An image equal
    /// to 1 contributes a zero column.
    pub fn from_monic_map(map: &MonomialMap) -> Result<Self> {
        if !map.is_endomorphism() {
            return Err(Error::NotEndomorphism {
                source_vars: map.n(),
                target_vars: map.target_vars(),
            });
        }
        if !map.is_monic() {
            return Err(Error::NotMonic);
        }
        let n = map.n();
        let mut out = Self::zero(n);
        for (j, image) in map.images().iter().enumerate() {
            let f = image.as_monomial().ok_or(Error::ZeroImage(j + 1))?;
            for (i, &e) in f.exponents().iter().enumerate() {
                out.set(i, j, e);
            }
        }
        Ok(out)
    }

    /// The monic map sending `X_j` to the monomial whose exponents are
    /// column `j`.
    pub fn to_monic_map(&self, domain: Domain) -> MonomialMap {
        let images = (0..self.n)
            .map(|j| Image::Monomial(Monomial::monic(domain, self.column(j))))
            .collect();
        MonomialMap::new(domain, images).expect("columns have length n")
    }

    /// Evaluates the three structural clauses that every idempotent
    /// exponent matrix satisfies.
    pub fn structure_report(&self) -> StructureReport {
        let n = self.n;
        let diagonal_ok = self.diagonal().iter().all(|&d| d <= 1);
        let ones: Vec<usize> = (0..n).filter(|&i| self.get(i, i) == 1).collect();
        // column i carries a nonzero entry at j  =>  column j vanishes
        let zero_column_rule_ok = ones.iter().all(|&i| {
            (0..n)
                .filter(|&j| j != i && self.get(j, i) != 0)
                .all(|j| self.is_zero_column(j))
        });
        let zero_row_rule_ok = ones.iter().all(|&i| {
            (0..n)
                .filter(|&j| j != i && self.get(i, j) != 0)
                .all(|j| self.is_zero_row(j))
        });
        let trace = self.trace();
        let is_zero_when_traceless = trace != 0 || self.entries.iter().all(|&a| a == 0);
        StructureReport {
            diagonal_ok,
            zero_column_rule_ok,
            zero_row_rule_ok,
            trace,
            is_zero_when_traceless,
        }
    }

    /// Idempotency test for matrices with no zero row, by the column
    /// characterization: with `p` the number of unit diagonal entries,
    /// there are exactly `p` nonzero columns, each nonzero column has a 1 on
    /// the diagonal, and a row with a 1 on the diagonal has no other
    /// nonzero entry.
    pub fn characterize_nonzero_rows(&self) -> Result<bool> {
        if let Some(i) = self.first_zero_row() {
            return Err(Error::ZeroRow(i + 1));
        }
        let n = self.n;
        let nonzero = self.nonzero_columns();
        let p = (0..n).filter(|&i| self.get(i, i) == 1).count();
        let column_count = nonzero.len() == p;
        let unit_diagonal = nonzero.iter().all(|&j| self.get(j, j) == 1);
        let clean_rows = (0..n)
            .filter(|&i| self.get(i, i) == 1)
            .all(|i| (0..n).all(|j| j == i || self.get(i, j) == 0));
        Ok(column_count && unit_diagonal && clean_rows)
    }

    /// Rank of an idempotent matrix, read off as its trace.
    pub fn rank(&self) -> Result<usize> {
        if !self.is_idempotent()? {
            return Err(Error::NotIdempotent);
        }
        Ok(self.trace() as usize)
    }
}

impl fmt::Display for ExponentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(u64::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for ExponentMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

/// Outcome of the structural clauses on an exponent matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    /// Every diagonal entry is 0 or 1.
    pub diagonal_ok: bool,
    /// `a_ii = 1` and `a_ji != 0` (`j != i`) force column `j` to vanish.
    pub zero_column_rule_ok: bool,
    /// `a_ii = 1` and `a_ij != 0` (`j != i`) force row `j` to vanish.
    pub zero_row_rule_ok: bool,
    pub trace: u64,
    /// A traceless matrix is zero.
    pub is_zero_when_traceless: bool,
}

impl StructureReport {
    pub fn all_hold(&self) -> bool {
        self.diagonal_ok
            && self.zero_column_rule_ok
            && self.zero_row_rule_ok
            && self.is_zero_when_traceless
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u64]]) -> ExponentMatrix {
        ExponentMatrix::from_rows(rows).unwrap()
    }

    fn phi1_matrix() -> ExponentMatrix {
        m(&[&[1, 0, 0], &[0, 1, 0], &[1, 0, 0]])
    }

    #[test]
    fn map_to_matrix() {
        let d = Domain::Integers;
        let phi1 = MonomialMap::new(
            d,
            vec![
                Monomial::monic(d, vec![1, 0, 1]).into(),
                Monomial::variable(d, 3, 1).into(),
                Monomial::one(d, 3).into(),
            ],
        )
        .unwrap();
        assert_eq!(
            ExponentMatrix::from_monic_map(&phi1).unwrap(),
            phi1_matrix()
        );
        assert_eq!(phi1_matrix().to_monic_map(d), phi1);
        assert_eq!(
            ExponentMatrix::from_monic_map(&MonomialMap::identity(d, 2)).unwrap(),
            ExponentMatrix::identity(2)
        );
        let ones = MonomialMap::new(d, vec![Monomial::one(d, 3).into(); 3]).unwrap();
        assert_eq!(
            ExponentMatrix::from_monic_map(&ones).unwrap(),
            ExponentMatrix::zero(3)
        );
        assert_eq!(ExponentMatrix::zero(3).to_monic_map(d), ones);

        let expected = MonomialMap::new(
            d,
            vec![
                Monomial::monic(d, vec![1, 2]).into(),
                Monomial::one(d, 2).into(),
            ],
        )
        .unwrap();
        assert_eq!(m(&[&[1, 0], &[2, 0]]).to_monic_map(d), expected);
    }

    #[test]
    fn map_to_matrix_errors() {
        let d = Domain::Integers;
        let zero = MonomialMap::new(d, vec![Image::Zero]).unwrap();
        assert_eq!(
            ExponentMatrix::from_monic_map(&zero),
            Err(Error::ZeroImage(1))
        );
        let scaled = MonomialMap::new(
            d,
            vec![Monomial::new(d.from_i64(2), vec![1]).unwrap().into()],
        )
        .unwrap();
        assert_eq!(
            ExponentMatrix::from_monic_map(&scaled),
            Err(Error::NotMonic)
        );
    }

    #[test]
    fn idempotency() {
        for n in 1..6 {
            assert!(ExponentMatrix::identity(n).is_idempotent().unwrap());
        }
        assert!(m(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]])
            .is_idempotent()
            .unwrap());
        assert!(!m(&[&[0, 1], &[1, 0]]).is_idempotent().unwrap());
        assert_eq!(
            m(&[&[u64::MAX, 0], &[0, 0]]).is_idempotent(),
            Err(Error::ExponentOverflow)
        );
    }

    #[test]
    fn structure_reports() {
        let r = ExponentMatrix::identity(3).structure_report();
        assert!(r.all_hold());
        assert_eq!(r.trace, 3);

        let r = phi1_matrix().structure_report();
        assert!(r.diagonal_ok && r.zero_column_rule_ok && r.zero_row_rule_ok);
        assert_eq!(r.trace, 2);

        let r = m(&[&[2, 0], &[0, 0]]).structure_report();
        assert!(!r.diagonal_ok);
        assert!(!m(&[&[2, 0], &[0, 0]]).is_idempotent().unwrap());

        // a_11 = 1 and a_21 = 1, but column 2 is nonzero
        let r = m(&[&[1, 0], &[1, 1]]).structure_report();
        assert!(!r.zero_column_rule_ok);
        assert!(!r.zero_row_rule_ok);
        assert!(r.diagonal_ok);

        let r = m(&[&[0, 1], &[1, 0]]).structure_report();
        assert!(!r.is_zero_when_traceless);
        assert!(ExponentMatrix::zero(2).structure_report().all_hold());
    }

    #[test]
    fn nonzero_row_characterization() {
        assert!(phi1_matrix().characterize_nonzero_rows().unwrap());
        assert!(ExponentMatrix::identity(4)
            .characterize_nonzero_rows()
            .unwrap());
        let ones = m(&[&[1, 1], &[1, 1]]);
        assert!(!ones.characterize_nonzero_rows().unwrap());
        assert!(!ones.is_idempotent().unwrap());
        assert_eq!(
            m(&[&[1, 0], &[0, 0]]).characterize_nonzero_rows(),
            Err(Error::ZeroRow(2))
        );
    }

    #[test]
    fn ranks() {
        assert_eq!(ExponentMatrix::zero(3).rank().unwrap(), 0);
        assert_eq!(phi1_matrix().rank().unwrap(), 2);
        assert_eq!(ExponentMatrix::identity(5).rank().unwrap(), 5);
        assert_eq!(m(&[&[0, 1], &[1, 0]]).rank(), Err(Error::NotIdempotent));
    }

    #[test]
    fn shape_validation() {
        assert!(ExponentMatrix::from_rows(&[[1u64, 0]]).is_err());
        assert!(ExponentMatrix::new(0, vec![]).is_err());
        assert!(ExponentMatrix::new(2, vec![0; 3]).is_err());
    }
}
