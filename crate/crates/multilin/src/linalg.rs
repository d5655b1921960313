//! Exact dense linear algebra over [`Rational`].
//!
//! Ordinary flat-indexed matrices back the verification of the spectral,
//! rank and determinant laws of the graded powers. Everything here is
//! exact: the determinant uses fraction-free (Bareiss) elimination to
//! bound intermediate growth, rank and inverse use exact Gaussian
//! elimination.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    /// Builds from row-major entries; length must be `rows * cols`.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(DenseMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch(format!(
                "ragged rows in {r}x{c} matrix"
            )));
        }
        Ok(DenseMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn construct(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        DenseMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> DenseMatrix {
        DenseMatrix::construct(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn add(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, factor: &Rational) -> DenseMatrix {
        let entries = self.entries.iter().map(|a| a * factor).collect();
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    fn check_same_shape(&self, other: &DenseMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Exact matrix product.
    pub fn matmul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = DenseMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let term = a * other.at(k, c);
                    *out.at_mut(r, c) += &term;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn matvec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if self.cols != x.len() {
            return Err(Error::DimensionMismatch(format!(
                "cannot apply {}x{} to vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        let mut out = vec![Rational::zero(); self.rows];
        for (r, slot) in out.iter_mut().enumerate() {
            for (c, value) in x.iter().enumerate() {
                let term = self.at(r, c) * value;
                *slot += &term;
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let mut m = self.clone();
        let mut sign = 1i8;
        let mut prev_pivot = Rational::one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.at(r, k).is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return Ok(Rational::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                    // Exact by the Bareiss identity: prev_pivot divides.
                    *m.at_mut(i, j) = num / prev_pivot.clone();
                }
                *m.at_mut(i, k) = Rational::zero();
            }
            prev_pivot = m.at(k, k).clone();
        }
        let det = m.at(n - 1, n - 1).clone();
        Ok(if sign < 0 { -det } else { det })
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut pivot_row = 0;
        for col in 0..m.cols {
            let Some(r) = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, r);
            let pivot = m.at(pivot_row, col).clone();
            for i in pivot_row + 1..m.rows {
                if m.at(i, col).is_zero() {
                    continue;
                }
                let factor = m.at(i, col) / &pivot;
                for j in col..m.cols {
                    let term = &factor * m.at(pivot_row, j);
                    *m.at_mut(i, j) -= &term;
                }
            }
            rank += 1;
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        rank
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<DenseMatrix> {
        if self.rows != self.cols {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = DenseMatrix::identity(n);
        for col in 0..n {
            let Some(r) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Err(Error::Singular);
            };
            m.swap_rows(col, r);
            inv.swap_rows(col, r);
            let pivot = m.at(col, col).clone();
            for j in 0..n {
                *m.at_mut(col, j) = m.at(col, j) / &pivot;
                *inv.at_mut(col, j) = inv.at(col, j) / &pivot;
            }
            for i in 0..n {
                if i == col || m.at(i, col).is_zero() {
                    continue;
                }
                let factor = m.at(i, col).clone();
                for j in 0..n {
                    let t1 = &factor * m.at(col, j);
                    *m.at_mut(i, j) -= &t1;
                    let t2 = &factor * inv.at(col, j);
                    *inv.at_mut(i, j) -= &t2;
                }
            }
        }
        Ok(inv)
    }

    /// Whether every entry below the main diagonal is zero.
    pub fn is_upper_triangular(&self) -> bool {
        for r in 1..self.rows {
            for c in 0..r.min(self.cols) {
                if !self.at(r, c).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Diagonal entries as a sorted multiset; requires a square upper
    /// triangular matrix, whose spectrum this is.
    pub fn triangular_spectrum(&self) -> Result<Vec<Rational>> {
        if self.rows != self.cols {
            return Err(Error::NotSquare);
        }
        if !self.is_upper_triangular() {
            return Err(Error::NotUpperTriangular);
        }
        let mut diag: Vec<Rational> = (0..self.rows).map(|i| self.at(i, i).clone()).collect();
        diag.sort();
        Ok(diag)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl core::fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(f, "DenseMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{} ", self.at(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn m(rows: &[&[i64]]) -> DenseMatrix {
        DenseMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| q(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn matmul_examples() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let id = DenseMatrix::identity(2);
        assert_eq!(id.matmul(&a).unwrap(), a);
        let flip = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.matmul(&flip).unwrap(), m(&[&[2, 1], &[4, 3]]));
        let s = m(&[&[2]]).matmul(&m(&[&[3]])).unwrap();
        assert_eq!(s, m(&[&[6]]));
        assert!(a.matmul(&m(&[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn det_examples() {
        assert_eq!(m(&[&[2, 0], &[0, 3]]).det().unwrap(), q(6));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det().unwrap(), q(0));
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.det().unwrap(), q(18));
        assert!(m(&[&[1, 2]]).det().is_err());
    }

    #[test]
    fn det_with_fractions() {
        let a = DenseMatrix::from_rows(vec![
            vec![Rational::new(1, 2).unwrap(), q(1)],
            vec![q(1), Rational::new(1, 3).unwrap()],
        ])
        .unwrap();
        assert_eq!(a.det().unwrap(), Rational::new(-5, 6).unwrap());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(DenseMatrix::identity(3).rank(), 3);
        assert_eq!(DenseMatrix::zeros(2, 3).rank(), 0);
        let tall = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(tall.rank(), 2);
        assert_eq!(tall.rank(), tall.transpose().rank());
    }

    #[test]
    fn inverse_examples() {
        let a = m(&[&[1, 1], &[0, 1]]);
        assert_eq!(a.inverse().unwrap(), m(&[&[1, -1], &[0, 1]]));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());
        let b = m(&[&[2, 1], &[7, 4]]);
        assert_eq!(
            b.matmul(&b.inverse().unwrap()).unwrap(),
            DenseMatrix::identity(2)
        );
    }

    #[test]
    fn det_is_multiplicative() {
        let a = m(&[&[2, 1, 3], &[0, 1, -1], &[4, 2, 1]]);
        let b = m(&[&[1, 0, 2], &[3, 1, 0], &[0, -2, 1]]);
        let ab = a.matmul(&b).unwrap();
        assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn triangular_checks() {
        let id = DenseMatrix::identity(3);
        assert!(id.is_upper_triangular());
        assert_eq!(id.triangular_spectrum().unwrap(), vec![q(1), q(1), q(1)]);
        let t = m(&[&[1, 5], &[0, 2]]);
        assert_eq!(t.triangular_spectrum().unwrap(), vec![q(1), q(2)]);
        let lower = m(&[&[0, 0], &[1, 0]]);
        assert!(!lower.is_upper_triangular());
        assert_eq!(lower.triangular_spectrum(), Err(Error::NotUpperTriangular));
    }
}
