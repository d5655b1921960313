//! The symmetric matrix family and its graded product.
//!
//! A [`SymMatrix`] of shape `(p, p')` over base dimensions `(n, n')` has
//! rows indexed by the weight-`p` multi-indices of dimension `n` and
//! columns by the weight-`p'` multi-indices of dimension `n'`, both laid
//! out in graded-order rank. The ⊙ product convolves two such matrices
//! with a binomial weight on the column side; normalized ⊙-powers of an
//! ordinary matrix act on ⊙-powers of vectors.
//!
//! Ordinary (flat) products between strata go through the graded rank
//! layout; that layout is part of the public contract.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::multiindex::{multi_binomial, stratum, stratum_size, MultiIndex};
use crate::rational::Rational;

/// A dense matrix over one weight stratum pair of the multi-index grid.
#[derive(Clone, PartialEq, Eq)]
pub struct SymMatrix {
    n: usize,
    n_prime: usize,
    p: usize,
    p_prime: usize,
    /// Row-major over (graded rank of row index, graded rank of column index).
    entries: Vec<Rational>,
}

impl SymMatrix {
    pub fn zeros(n: usize, n_prime: usize, p: usize, p_prime: usize) -> Self {
        let len = stratum_size(n, p) * stratum_size(n_prime, p_prime);
        SymMatrix {
            n,
            n_prime,
            p,
            p_prime,
            entries: vec![Rational::zero(); len],
        }
    }

    /// The unit of the graded algebra: the weight-(0,0) matrix with a
    /// single entry 1. Also the zeroth ⊙-power of anything.
    pub fn unit(n: usize, n_prime: usize) -> Self {
        SymMatrix {
            n,
            n_prime,
            p: 0,
            p_prime: 0,
            entries: vec![Rational::one()],
        }
    }

    /// An ordinary `n`-dimensional identity as a weight-(1,1) matrix.
    pub fn identity(n: usize) -> Self {
        Self::from_dense(n, n, 1, 1, &DenseMatrix::identity(n)).expect("shape matches")
    }

    pub fn from_fn(
        n: usize,
        n_prime: usize,
        p: usize,
        p_prime: usize,
        f: impl Fn(&MultiIndex, &MultiIndex) -> Rational,
    ) -> Self {
        let rows = stratum(n, p);
        let cols = stratum(n_prime, p_prime);
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for r in &rows {
            for c in &cols {
                entries.push(f(r, c));
            }
        }
        SymMatrix {
            n,
            n_prime,
            p,
            p_prime,
            entries,
        }
    }

    /// Reinterprets a flat matrix as a stratum matrix; the flat shape
    /// must match the stratum sizes.
    pub fn from_dense(
        n: usize,
        n_prime: usize,
        p: usize,
        p_prime: usize,
        dense: &DenseMatrix,
    ) -> Result<Self> {
        let rows = stratum_size(n, p);
        let cols = stratum_size(n_prime, p_prime);
        if dense.rows() != rows || dense.cols() != cols {
            return Err(Error::DimensionMismatch(format!(
                "stratum (n={n}, p={p}) x (n'={n_prime}, p'={p_prime}) is {rows}x{cols}, \
                 flat matrix is {}x{}",
                dense.rows(),
                dense.cols()
            )));
        }
        Ok(SymMatrix {
            n,
            n_prime,
            p,
            p_prime,
            entries: dense.entries().to_vec(),
        })
    }

    /// The flat view in graded rank layout.
    pub fn to_dense(&self) -> DenseMatrix {
        DenseMatrix::from_entries(self.flat_rows(), self.flat_cols(), self.entries.clone())
            .expect("entry count matches stratum sizes")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn n_prime(&self) -> usize {
        self.n_prime
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn p_prime(&self) -> usize {
        self.p_prime
    }

    pub fn flat_rows(&self) -> usize {
        stratum_size(self.n, self.p)
    }

    pub fn flat_cols(&self) -> usize {
        stratum_size(self.n_prime, self.p_prime)
    }

    pub fn row_stratum(&self) -> Vec<MultiIndex> {
        stratum(self.n, self.p)
    }

    pub fn col_stratum(&self) -> Vec<MultiIndex> {
        stratum(self.n_prime, self.p_prime)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn entry_at_rank(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.flat_cols() + col]
    }

    /// Entry at a (row multi-index, column multi-index) pair.
    pub fn entry(&self, row: &MultiIndex, col: &MultiIndex) -> Result<&Rational> {
        self.check_index(row, col)?;
        Ok(self.entry_at_rank(row.rank(), col.rank()))
    }

    pub fn set_entry(&mut self, row: &MultiIndex, col: &MultiIndex, value: Rational) -> Result<()> {
        self.check_index(row, col)?;
        let cols = self.flat_cols();
        self.entries[row.rank() * cols + col.rank()] = value;
        Ok(())
    }

    fn check_index(&self, row: &MultiIndex, col: &MultiIndex) -> Result<()> {
        if row.dim() != self.n || row.weight() != self.p {
            return Err(Error::DimensionMismatch(format!(
                "row index {row:?} is not a weight-{} multi-index of dimension {}",
                self.p, self.n
            )));
        }
        if col.dim() != self.n_prime || col.weight() != self.p_prime {
            return Err(Error::DimensionMismatch(format!(
                "column index {col:?} is not a weight-{} multi-index of dimension {}",
                self.p_prime, self.n_prime
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &SymMatrix) -> Result<SymMatrix> {
        self.check_same_stratum(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(SymMatrix { entries, ..*self })
    }

    pub fn sub(&self, other: &SymMatrix) -> Result<SymMatrix> {
        self.check_same_stratum(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(SymMatrix { entries, ..*self })
    }

    pub fn neg(&self) -> SymMatrix {
        let entries = self.entries.iter().map(|a| -a).collect();
        SymMatrix { entries, ..*self }
    }

    pub fn scale(&self, factor: &Rational) -> SymMatrix {
        let entries = self.entries.iter().map(|a| a * factor).collect();
        SymMatrix { entries, ..*self }
    }

    fn check_same_stratum(&self, other: &SymMatrix) -> Result<()> {
        if (self.n, self.n_prime, self.p, self.p_prime)
            != (other.n, other.n_prime, other.p, other.p_prime)
        {
            return Err(Error::DimensionMismatch(format!(
                "stratum ({},{};{},{}) vs ({},{};{},{})",
                self.n,
                self.n_prime,
                self.p,
                self.p_prime,
                other.n,
                other.n_prime,
                other.p,
                other.p_prime
            )));
        }
        Ok(())
    }

    fn check_same_base(&self, other: &SymMatrix) -> Result<()> {
        if self.n != other.n || self.n_prime != other.n_prime {
            return Err(Error::DimensionMismatch(format!(
                "base dimensions ({},{}) vs ({},{})",
                self.n, self.n_prime, other.n, other.n_prime
            )));
        }
        Ok(())
    }

    /// The graded product: convolves entries of `self` and `other`,
    /// weighting each term by the column-side multi-binomial. The result
    /// lives in the weight-`(p+q, p'+q')` stratum.
    pub fn odot(&self, other: &SymMatrix) -> Result<SymMatrix> {
        self.check_same_base(other)?;
        let mut out = SymMatrix::zeros(
            self.n,
            self.n_prime,
            self.p + other.p,
            self.p_prime + other.p_prime,
        );
        let out_cols = out.flat_cols();

        let a_rows = self.row_stratum();
        let a_cols = self.col_stratum();
        let b_rows = other.row_stratum();
        let b_cols = other.col_stratum();

        for (ar, beta) in a_rows.iter().enumerate() {
            for (ac, beta_p) in a_cols.iter().enumerate() {
                let a = self.entry_at_rank(ar, ac);
                if a.is_zero() {
                    continue;
                }
                for (br, gamma) in b_rows.iter().enumerate() {
                    let row = beta.add(gamma)?;
                    let row_rank = row.rank();
                    for (bc, gamma_p) in b_cols.iter().enumerate() {
                        let b = other.entry_at_rank(br, bc);
                        if b.is_zero() {
                            continue;
                        }
                        let col = beta_p.add(gamma_p)?;
                        let coeff = multi_binomial(&col, beta_p);
                        let term = coeff * (a * b);
                        out.entries[row_rank * out_cols + col.rank()] += &term;
                    }
                }
            }
        }
        Ok(out)
    }

    /// The `m`-th ⊙-power; the zeroth power is the graded unit.
    pub fn odot_power(&self, m: usize) -> Result<SymMatrix> {
        let mut acc = SymMatrix::unit(self.n, self.n_prime);
        for _ in 0..m {
            acc = acc.odot(self)?;
        }
        Ok(acc)
    }

    /// The normalized power `self^(k) / k!`.
    pub fn sym_power(&self, k: usize) -> Result<SymMatrix> {
        let inv_fact = Rational::factorial(k)
            .recip()
            .expect("factorial is nonzero");
        Ok(self.odot_power(k)?.scale(&inv_fact))
    }

    /// Ordinary (flat) product through the graded rank layout: the
    /// column stratum of `self` must equal the row stratum of `other`.
    pub fn matmul(&self, other: &SymMatrix) -> Result<SymMatrix> {
        if self.n_prime != other.n || self.p_prime != other.p {
            return Err(Error::DimensionMismatch(format!(
                "inner strata differ: (n'={}, p'={}) vs (n={}, p={})",
                self.n_prime, self.p_prime, other.n, other.p
            )));
        }
        let flat = self.to_dense().matmul(&other.to_dense())?;
        SymMatrix::from_dense(self.n, other.n_prime, self.p, other.p_prime, &flat)
    }

    /// Reindexes the rows of a row-weight-1 matrix into a larger base
    /// dimension: row `e_i` becomes row `e_{offset+i}`, all other rows
    /// zero.
    pub fn padded_embed_rows(&self, offset: usize, total: usize) -> Result<SymMatrix> {
        if self.p != 1 {
            return Err(Error::Unsupported(format!(
                "row padding needs row weight 1, got {}",
                self.p
            )));
        }
        if offset + self.n > total {
            return Err(Error::DimensionMismatch(format!(
                "offset {offset} + {} rows exceeds total {total}",
                self.n
            )));
        }
        let mut out = SymMatrix::zeros(total, self.n_prime, 1, self.p_prime);
        let cols = out.flat_cols();
        for i in 0..self.n {
            for c in 0..cols {
                out.entries[(offset + i) * cols + c] = self.entry_at_rank(i, c).clone();
            }
        }
        Ok(out)
    }
}

impl core::fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "SymMatrix(n={}, n'={}, p={}, p'={}) {:?}",
            self.n,
            self.n_prime,
            self.p,
            self.p_prime,
            self.to_dense()
        )
    }
}

/// A vector of `R^n` as a weight-(1,0) column.
pub fn column_vector(entries: &[Rational]) -> SymMatrix {
    let n = entries.len();
    SymMatrix {
        n,
        n_prime: n,
        p: 1,
        p_prime: 0,
        entries: entries.to_vec(),
    }
}

/// A covector as a weight-(0,1) row.
pub fn row_covector(entries: &[Rational]) -> SymMatrix {
    let n = entries.len();
    SymMatrix {
        n,
        n_prime: n,
        p: 0,
        p_prime: 1,
        entries: entries.to_vec(),
    }
}

/// Extracts the single column of a weight-(p,0) matrix.
pub fn column_entries(m: &SymMatrix) -> Result<Vec<Rational>> {
    if m.p_prime != 0 {
        return Err(Error::Unsupported(format!(
            "not a column: column weight is {}",
            m.p_prime
        )));
    }
    Ok(m.entries.clone())
}

/// The normalized vector power `x^(p) / p!`, whose entry at a weight-`p`
/// multi-index `a` is `x^a / a!`. Agrees with the ⊙-power of the column
/// vector divided by `p!`.
pub fn vector_power_normalized(x: &[Rational], p: usize) -> SymMatrix {
    let n = x.len();
    let rows = stratum(n, p);
    let mut entries = Vec::with_capacity(rows.len());
    for a in &rows {
        let inv_fact = Rational::from(a.factorial())
            .recip()
            .expect("factorial nonzero");
        let value = a.monomial(x).expect("dimensions match") * inv_fact;
        entries.push(value);
    }
    SymMatrix {
        n,
        n_prime: n,
        p,
        p_prime: 0,
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from(v)
    }

    fn sym2x2(values: [[i64; 2]; 2]) -> SymMatrix {
        let dense = DenseMatrix::from_rows(
            values
                .iter()
                .map(|row| row.iter().map(|&v| q(v)).collect())
                .collect(),
        )
        .unwrap();
        SymMatrix::from_dense(2, 2, 1, 1, &dense).unwrap()
    }

    #[test]
    fn odot_matches_two_by_two_grid() {
        // Product of two ordinary 2x2 matrices, written out entry by
        // entry on the weight-2 strata.
        let a = sym2x2([[1, 2], [3, 4]]);
        let b = sym2x2([[5, 6], [7, 8]]);
        let c = a.odot(&b).unwrap();
        let expected = [
            [q(10), q(16), q(24)],
            [q(44), q(60), q(80)],
            [q(42), q(52), q(64)],
        ];
        for (r, row) in expected.iter().enumerate() {
            for (col, want) in row.iter().enumerate() {
                assert_eq!(c.entry_at_rank(r, col), want, "entry ({r},{col})");
            }
        }
    }

    #[test]
    fn odot_with_zero_is_zero() {
        let a = sym2x2([[1, 2], [3, 4]]);
        let z = SymMatrix::zeros(2, 2, 1, 1);
        assert!(a.odot(&z).unwrap().is_zero());
    }

    #[test]
    fn odot_scalar_strata() {
        // Two 1-dimensional weight-(1,1) scalars multiply to 2ab on the
        // weight-(2,2) stratum: the column binomial contributes the 2.
        let a = SymMatrix::from_fn(1, 1, 1, 1, |_, _| q(3));
        let b = SymMatrix::from_fn(1, 1, 1, 1, |_, _| q(4));
        let c = a.odot(&b).unwrap();
        assert_eq!(c.p(), 2);
        assert_eq!(c.p_prime(), 2);
        assert_eq!(c.entry_at_rank(0, 0), &q(24));
    }

    #[test]
    fn unit_is_neutral() {
        let a = sym2x2([[1, 2], [3, 4]]);
        let e = SymMatrix::unit(2, 2);
        assert_eq!(e.odot(&a).unwrap(), a);
        assert_eq!(a.odot(&e).unwrap(), a);
        assert_eq!(a.odot_power(0).unwrap(), e);
    }

    #[test]
    fn column_vector_power_is_multinomial() {
        // Second power of the column (1, 2): multinomial-weighted
        // monomials 1, 4, 4 on the weight-2 stratum.
        let v = column_vector(&[q(1), q(2)]);
        let v2 = v.odot(&v).unwrap();
        assert_eq!(v2.entry_at_rank(0, 0), &q(1));
        assert_eq!(v2.entry_at_rank(1, 0), &q(4));
        assert_eq!(v2.entry_at_rank(2, 0), &q(4));
        // The direct normalized power agrees with the ⊙ route.
        let direct = vector_power_normalized(&[q(1), q(2)], 2);
        assert_eq!(v.sym_power(2).unwrap(), direct);
    }

    #[test]
    fn row_covector_power_is_scaled_monomial() {
        // Second power of the row (1, 2): 2! times the monomials,
        // i.e. 2, 4, 8.
        let h = row_covector(&[q(1), q(2)]);
        let h2 = h.odot(&h).unwrap();
        assert_eq!(h2.entry_at_rank(0, 0), &q(2));
        assert_eq!(h2.entry_at_rank(0, 1), &q(4));
        assert_eq!(h2.entry_at_rank(0, 2), &q(8));
    }

    #[test]
    fn identity_power_is_stratum_identity() {
        for n in 1..=3 {
            for k in 0..=3 {
                let id = SymMatrix::identity(n);
                let powered = id.sym_power(k).unwrap();
                assert_eq!(
                    powered.to_dense(),
                    DenseMatrix::identity(stratum_size(n, k))
                );
            }
        }
    }

    #[test]
    fn padding_reindexes_rows() {
        let a = sym2x2([[1, 2], [3, 4]]);
        assert_eq!(a.padded_embed_rows(0, 2).unwrap(), a);

        let single = SymMatrix::from_fn(1, 1, 1, 1, |_, _| q(5));
        let padded = single.padded_embed_rows(1, 2).unwrap();
        assert_eq!(padded.entry_at_rank(0, 0), &q(0));
        assert_eq!(padded.entry_at_rank(1, 0), &q(5));

        let z = SymMatrix::zeros(2, 3, 1, 2);
        assert!(z.padded_embed_rows(1, 4).unwrap().is_zero());
        assert!(single.padded_embed_rows(2, 2).is_err());
        assert!(sym2x2([[1, 2], [3, 4]])
            .odot_power(2)
            .unwrap()
            .padded_embed_rows(0, 5)
            .is_err());
    }

    #[test]
    fn matmul_checks_inner_stratum() {
        let a = sym2x2([[1, 0], [0, 1]]);
        let v = column_vector(&[q(1), q(2)]);
        let av = a.matmul(&v).unwrap();
        assert_eq!(column_entries(&av).unwrap(), vec![q(1), q(2)]);
        let w = column_vector(&[q(1), q(2), q(3)]);
        assert!(a.matmul(&w).is_err());
    }

    #[test]
    fn base_dimension_mismatch_rejected() {
        let a = sym2x2([[1, 2], [3, 4]]);
        let b = SymMatrix::zeros(3, 2, 1, 1);
        assert!(a.odot(&b).is_err());
    }
}
