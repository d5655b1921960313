//! The antisymmetric matrix family and its signed product.
//!
//! An [`AltMatrix`] of shape `(p, p')` over base dimensions `(n, n')` has
//! rows indexed by the strictly increasing `p`-tuples in `1..=n` and
//! columns by the strictly increasing `p'`-tuples in `1..=n'`, laid out
//! in colexicographic rank. The ∧ product convolves entries over pairs
//! of block shuffles with signs; the normalized wedge power of an
//! ordinary matrix is its classical compound matrix, whose entries are
//! minors.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::multiindex::{strict_stratum, strict_stratum_size, StrictIndex};
use crate::rational::Rational;
use crate::shuffle::{shuffles, Permutation};

/// A dense matrix over one pair of strict-index strata.
#[derive(Clone, PartialEq, Eq)]
pub struct AltMatrix {
    n: usize,
    n_prime: usize,
    p: usize,
    p_prime: usize,
    /// Row-major over (colex rank of row tuple, colex rank of column tuple).
    entries: Vec<Rational>,
}

impl AltMatrix {
    pub fn zeros(n: usize, n_prime: usize, p: usize, p_prime: usize) -> Self {
        let len = strict_stratum_size(n, p) * strict_stratum_size(n_prime, p_prime);
        AltMatrix {
            n,
            n_prime,
            p,
            p_prime,
            entries: vec![Rational::zero(); len],
        }
    }

    /// The unit for ∧: the weight-(0,0) matrix with a single entry 1.
    pub fn unit(n: usize, n_prime: usize) -> Self {
        AltMatrix {
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
        f: impl Fn(&StrictIndex, &StrictIndex) -> Rational,
    ) -> Self {
        let rows = strict_stratum(n, p);
        let cols = strict_stratum(n_prime, p_prime);
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for r in &rows {
            for c in &cols {
                entries.push(f(r, c));
            }
        }
        AltMatrix {
            n,
            n_prime,
            p,
            p_prime,
            entries,
        }
    }

    pub fn from_dense(
        n: usize,
        n_prime: usize,
        p: usize,
        p_prime: usize,
        dense: &DenseMatrix,
    ) -> Result<Self> {
        let rows = strict_stratum_size(n, p);
        let cols = strict_stratum_size(n_prime, p_prime);
        if dense.rows() != rows || dense.cols() != cols {
            return Err(Error::DimensionMismatch(format!(
                "stratum (n={n}, p={p}) x (n'={n_prime}, p'={p_prime}) is {rows}x{cols}, \
                 flat matrix is {}x{}",
                dense.rows(),
                dense.cols()
            )));
        }
        Ok(AltMatrix {
            n,
            n_prime,
            p,
            p_prime,
            entries: dense.entries().to_vec(),
        })
    }

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
        strict_stratum_size(self.n, self.p)
    }

    pub fn flat_cols(&self) -> usize {
        strict_stratum_size(self.n_prime, self.p_prime)
    }

    pub fn row_stratum(&self) -> Vec<StrictIndex> {
        strict_stratum(self.n, self.p)
    }

    pub fn col_stratum(&self) -> Vec<StrictIndex> {
        strict_stratum(self.n_prime, self.p_prime)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn entry_at_rank(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.flat_cols() + col]
    }

    pub fn entry(&self, row: &StrictIndex, col: &StrictIndex) -> Result<&Rational> {
        self.check_index(row, col)?;
        Ok(self.entry_at_rank(row.rank(), col.rank()))
    }

    pub fn set_entry(
        &mut self,
        row: &StrictIndex,
        col: &StrictIndex,
        value: Rational,
    ) -> Result<()> {
        self.check_index(row, col)?;
        let cols = self.flat_cols();
        self.entries[row.rank() * cols + col.rank()] = value;
        Ok(())
    }

    fn check_index(&self, row: &StrictIndex, col: &StrictIndex) -> Result<()> {
        if row.len() != self.p || row.entries().iter().any(|&e| e > self.n) {
            return Err(Error::DimensionMismatch(format!(
                "row index {row:?} is not a strict {}-tuple in 1..={}",
                self.p, self.n
            )));
        }
        if col.len() != self.p_prime || col.entries().iter().any(|&e| e > self.n_prime) {
            return Err(Error::DimensionMismatch(format!(
                "column index {col:?} is not a strict {}-tuple in 1..={}",
                self.p_prime, self.n_prime
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &AltMatrix) -> Result<AltMatrix> {
        self.check_same_stratum(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(AltMatrix { entries, ..*self })
    }

    pub fn sub(&self, other: &AltMatrix) -> Result<AltMatrix> {
        self.check_same_stratum(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(AltMatrix { entries, ..*self })
    }

    pub fn neg(&self) -> AltMatrix {
        let entries = self.entries.iter().map(|a| -a).collect();
        AltMatrix { entries, ..*self }
    }

    pub fn scale(&self, factor: &Rational) -> AltMatrix {
        let entries = self.entries.iter().map(|a| a * factor).collect();
        AltMatrix { entries, ..*self }
    }

    fn check_same_stratum(&self, other: &AltMatrix) -> Result<()> {
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

    fn check_same_base(&self, other: &AltMatrix) -> Result<()> {
        if self.n != other.n || self.n_prime != other.n_prime {
            return Err(Error::DimensionMismatch(format!(
                "base dimensions ({},{}) vs ({},{})",
                self.n, self.n_prime, other.n, other.n_prime
            )));
        }
        Ok(())
    }

    /// The signed product: each result entry is a double sum over row and
    /// column block shuffles, each term signed by the shuffle parities.
    pub fn wedge(&self, other: &AltMatrix) -> Result<AltMatrix> {
        self.check_same_base(other)?;
        let mut out = AltMatrix::zeros(
            self.n,
            self.n_prime,
            self.p + other.p,
            self.p_prime + other.p_prime,
        );
        let row_shuffles = split_shuffles(self.p, other.p);
        let col_shuffles = split_shuffles(self.p_prime, other.p_prime);
        let out_rows = out.row_stratum();
        let out_cols = out.col_stratum();
        let out_width = out_cols.len();

        for (ri, alpha) in out_rows.iter().enumerate() {
            for (ci, alpha_p) in out_cols.iter().enumerate() {
                let mut acc = Rational::zero();
                for (rf, rb, rsign) in &row_shuffles {
                    let a_row = subtuple(alpha, rf).rank();
                    let b_row = subtuple(alpha, rb).rank();
                    for (cf, cb, csign) in &col_shuffles {
                        let a = self.entry_at_rank(a_row, subtuple(alpha_p, cf).rank());
                        if a.is_zero() {
                            continue;
                        }
                        let b = other.entry_at_rank(b_row, subtuple(alpha_p, cb).rank());
                        if b.is_zero() {
                            continue;
                        }
                        let term = a * b;
                        if rsign * csign > 0 {
                            acc += &term;
                        } else {
                            acc -= &term;
                        }
                    }
                }
                out.entries[ri * out_width + ci] = acc;
            }
        }
        Ok(out)
    }

    /// The `k`-th ∧-power of a weight-(1,1) matrix; entries are `k!`
    /// times the `k x k` minors.
    pub fn wedge_power(&self, k: usize) -> Result<AltMatrix> {
        if self.p != 1 || self.p_prime != 1 {
            return Err(Error::Unsupported(format!(
                "wedge power needs a weight-(1,1) matrix, got ({},{})",
                self.p, self.p_prime
            )));
        }
        let mut acc = AltMatrix::unit(self.n, self.n_prime);
        for _ in 0..k {
            acc = acc.wedge(self)?;
        }
        Ok(acc)
    }

    /// The `k`-th compound matrix `self^∧k / k!`: entry at `(a, a')` is
    /// the minor of the underlying flat matrix on rows `a`, columns `a'`.
    pub fn compound(&self, k: usize) -> Result<AltMatrix> {
        let inv_fact = Rational::factorial(k)
            .recip()
            .expect("factorial is nonzero");
        Ok(self.wedge_power(k)?.scale(&inv_fact))
    }

    /// Ordinary (flat) product through the colex rank layout.
    pub fn matmul(&self, other: &AltMatrix) -> Result<AltMatrix> {
        if self.n_prime != other.n || self.p_prime != other.p {
            return Err(Error::DimensionMismatch(format!(
                "inner strata differ: (n'={}, p'={}) vs (n={}, p={})",
                self.n_prime, self.p_prime, other.n, other.p
            )));
        }
        let flat = self.to_dense().matmul(&other.to_dense())?;
        AltMatrix::from_dense(self.n, other.n_prime, self.p, other.p_prime, &flat)
    }

    /// Reindexes the rows of a row-weight-1 matrix into a larger base
    /// dimension, as in the symmetric family.
    pub fn padded_embed_rows(&self, offset: usize, total: usize) -> Result<AltMatrix> {
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
        let mut out = AltMatrix::zeros(total, self.n_prime, 1, self.p_prime);
        let cols = out.flat_cols();
        for i in 0..self.n {
            for c in 0..cols {
                out.entries[(offset + i) * cols + c] = self.entry_at_rank(i, c).clone();
            }
        }
        Ok(out)
    }
}

impl core::fmt::Debug for AltMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "AltMatrix(n={}, n'={}, p={}, p'={}) {:?}",
            self.n,
            self.n_prime,
            self.p,
            self.p_prime,
            self.to_dense()
        )
    }
}

/// Two-block shuffles as (front positions, back positions, sign).
fn split_shuffles(p: usize, q: usize) -> Vec<(Vec<usize>, Vec<usize>, i8)> {
    shuffles(p, q)
        .into_iter()
        .map(|perm: Permutation| {
            let front = perm.images()[..p].to_vec();
            let back = perm.images()[p..].to_vec();
            (front, back, perm.sign())
        })
        .collect()
}

/// Entries of `idx` at the given increasing positions.
fn subtuple(idx: &StrictIndex, positions: &[usize]) -> StrictIndex {
    StrictIndex::from_unchecked(positions.iter().map(|&i| idx.entries()[i]).collect())
}

/// Left fold of ∧ over the factors; the empty product is the unit.
pub fn multi_wedge(n: usize, n_prime: usize, factors: &[AltMatrix]) -> Result<AltMatrix> {
    let mut acc = AltMatrix::unit(n, n_prime);
    for f in factors {
        acc = acc.wedge(f)?;
    }
    Ok(acc)
}

/// A vector of `R^n` as a weight-(1,0) column.
pub fn alt_column_vector(entries: &[Rational]) -> AltMatrix {
    let n = entries.len();
    AltMatrix {
        n,
        n_prime: n,
        p: 1,
        p_prime: 0,
        entries: entries.to_vec(),
    }
}

/// Extracts the single column of a weight-(p,0) matrix.
pub fn alt_column_entries(m: &AltMatrix) -> Result<Vec<Rational>> {
    if m.p_prime != 0 {
        return Err(Error::Unsupported(format!(
            "not a column: column weight is {}",
            m.p_prime
        )));
    }
    Ok(m.entries.clone())
}

/// Change of basis for the matrix of an antisymmetric multilinear map on
/// a single space: `T^{-1} · A · compound(T, p')`. `A` must have row
/// weight 1 and equal base dimensions, `T` must be invertible.
pub fn gl_action_antisym(a: &AltMatrix, t: &DenseMatrix) -> Result<AltMatrix> {
    if a.p() != 1 {
        return Err(Error::Unsupported(format!(
            "the action needs a row-weight-1 matrix, got {}",
            a.p()
        )));
    }
    if a.n() != a.n_prime() || t.rows() != t.cols() || t.rows() != a.n() {
        return Err(Error::DimensionMismatch(format!(
            "action needs matching square dimensions, got matrix ({},{}) and T {}x{}",
            a.n(),
            a.n_prime(),
            t.rows(),
            t.cols()
        )));
    }
    let n = a.n();
    let t_inv = AltMatrix::from_dense(n, n, 1, 1, &t.inverse()?)?;
    let t_alt = AltMatrix::from_dense(n, n, 1, 1, t)?;
    let right = t_alt.compound(a.p_prime())?;
    t_inv.matmul(a)?.matmul(&right)
}
