//! Matrix representations of symmetric and antisymmetric multilinear
//! maps, and their pairing products.
//!
//! A symmetric map of arity `p` is represented by a weight-(1, p) matrix
//! applied to the normalized ⊙-product of the arguments; an
//! antisymmetric map by a weight-(1, p) strict-index matrix applied to
//! the wedge of the arguments. [`Tensor`] keeps the raw coefficient grid
//! and evaluates by direct nested summation, with no symmetry
//! assumptions, as an independent route to the same values.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::alt::{alt_column_entries, alt_column_vector, AltMatrix};
use crate::error::{Error, Result};
use crate::multiindex::MultiIndex;
use crate::rational::Rational;
use crate::shuffle::block_shuffles;
use crate::sym::{column_entries, column_vector, vector_power_normalized, SymMatrix};

/// A raw multilinear coefficient grid: `data[j][i_1]...[i_p]` row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor {
    out_dim: usize,
    in_dim: usize,
    arity: usize,
    data: Vec<Rational>,
}

impl Tensor {
    pub fn new(out_dim: usize, in_dim: usize, arity: usize, data: Vec<Rational>) -> Result<Self> {
        let expected = out_dim * in_dim.pow(arity as u32);
        if data.len() != expected {
            return Err(Error::DimensionMismatch(format!(
                "tensor of shape {out_dim} x {in_dim}^{arity} needs {expected} entries, got {}",
                data.len()
            )));
        }
        Ok(Tensor {
            out_dim,
            in_dim,
            arity,
            data,
        })
    }

    pub fn from_fn(
        out_dim: usize,
        in_dim: usize,
        arity: usize,
        f: impl Fn(usize, &[usize]) -> Rational,
    ) -> Self {
        let mut data = Vec::with_capacity(out_dim * in_dim.pow(arity as u32));
        let mut seq = vec![0usize; arity];
        for j in 0..out_dim {
            loop {
                data.push(f(j, &seq));
                if !next_sequence(&mut seq, in_dim) {
                    break;
                }
            }
        }
        Tensor {
            out_dim,
            in_dim,
            arity,
            data,
        }
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn in_dim(&self) -> usize {
        self.in_dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Coefficient at output `j` and index sequence `seq` (0-based).
    pub fn get(&self, j: usize, seq: &[usize]) -> &Rational {
        &self.data[self.offset(j, seq)]
    }

    fn offset(&self, j: usize, seq: &[usize]) -> usize {
        debug_assert_eq!(seq.len(), self.arity);
        let mut off = j;
        for &i in seq {
            off = off * self.in_dim + i;
        }
        off
    }

    /// Direct evaluation by nested summation over all index sequences.
    pub fn eval(&self, args: &[&[Rational]]) -> Result<Vec<Rational>> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: args.len(),
            });
        }
        for arg in args {
            if arg.len() != self.in_dim {
                return Err(Error::LengthMismatch {
                    expected: self.in_dim,
                    found: arg.len(),
                });
            }
        }
        let mut out = vec![Rational::zero(); self.out_dim];
        let mut seq = vec![0usize; self.arity];
        for (j, acc) in out.iter_mut().enumerate() {
            loop {
                let coeff = self.get(j, &seq);
                if !coeff.is_zero() {
                    let mut term = coeff.clone();
                    for (arg, &i) in args.iter().zip(&seq) {
                        term *= &arg[i];
                    }
                    *acc += &term;
                }
                if !next_sequence(&mut seq, self.in_dim) {
                    break;
                }
            }
        }
        Ok(out)
    }

    /// Averages the coefficients over all argument permutations.
    pub fn symmetrize(&self) -> Tensor {
        self.average(false)
    }

    /// Averages with signs, producing an alternating tensor.
    pub fn alternate(&self) -> Tensor {
        self.average(true)
    }

    fn average(&self, signed: bool) -> Tensor {
        let perms = block_shuffles(&vec![1; self.arity]);
        let inv_count = Rational::factorial(self.arity)
            .recip()
            .expect("factorial nonzero");
        Tensor::from_fn(self.out_dim, self.in_dim, self.arity, |j, seq| {
            let mut acc = Rational::zero();
            for perm in &perms {
                let permuted: Vec<usize> = (0..self.arity).map(|k| seq[perm.apply(k)]).collect();
                let term = self.get(j, &permuted);
                if signed && perm.sign() < 0 {
                    acc -= term;
                } else {
                    acc += term;
                }
            }
            acc * &inv_count
        })
    }
}

/// Advances `seq` through `[0, base)^len` lexicographically; false once
/// the sequence wraps around.
fn next_sequence(seq: &mut [usize], base: usize) -> bool {
    for slot in seq.iter_mut().rev() {
        *slot += 1;
        if *slot < base {
            return true;
        }
        *slot = 0;
    }
    false
}

/// A symmetric multilinear map held as a weight-(1, p) matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymMultiMap {
    matrix: SymMatrix,
}

impl SymMultiMap {
    /// Wraps a row-weight-1 matrix; the column weight is the arity.
    pub fn from_matrix(matrix: SymMatrix) -> Result<Self> {
        if matrix.p() != 1 {
            return Err(Error::Unsupported(format!(
                "a multilinear map matrix has row weight 1, got {}",
                matrix.p()
            )));
        }
        Ok(SymMultiMap { matrix })
    }

    /// Builds the representing matrix of a symmetric coefficient tensor:
    /// the column at a multi-index holds `p!` times the coefficient at
    /// any index sequence with that content.
    pub fn from_symmetric_tensor(t: &Tensor) -> Result<Self> {
        let fact = Rational::factorial(t.arity());
        let matrix = SymMatrix::from_fn(t.out_dim(), t.in_dim(), 1, t.arity(), |row, col| {
            let j = basis_position(row);
            t.get(j, &sorted_sequence(col)) * &fact
        });
        Ok(SymMultiMap { matrix })
    }

    pub fn arity(&self) -> usize {
        self.matrix.p_prime()
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.n_prime()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.n()
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Applies the map: the matrix against the normalized ⊙-product of
    /// the arguments.
    pub fn eval(&self, args: &[&[Rational]]) -> Result<Vec<Rational>> {
        if args.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: args.len(),
            });
        }
        let n = self.domain_dim();
        let mut acc = SymMatrix::unit(n, n);
        for arg in args {
            if arg.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: arg.len(),
                });
            }
            acc = acc.odot(&column_vector(arg))?;
        }
        let inv_fact = Rational::factorial(self.arity())
            .recip()
            .expect("factorial nonzero");
        column_entries(&self.matrix.matmul(&acc.scale(&inv_fact))?)
    }
}

/// An antisymmetric multilinear map held as a weight-(1, p) strict-index
/// matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AltMultiMap {
    matrix: AltMatrix,
}

impl AltMultiMap {
    pub fn from_matrix(matrix: AltMatrix) -> Result<Self> {
        if matrix.p() != 1 {
            return Err(Error::Unsupported(format!(
                "a multilinear map matrix has row weight 1, got {}",
                matrix.p()
            )));
        }
        Ok(AltMultiMap { matrix })
    }

    /// Builds the representing matrix of an alternating coefficient
    /// tensor: the column at a strict tuple holds the coefficient at
    /// that increasing index sequence.
    pub fn from_alternating_tensor(t: &Tensor) -> Result<Self> {
        let matrix = AltMatrix::from_fn(t.out_dim(), t.in_dim(), 1, t.arity(), |row, col| {
            let j = row.entries()[0] - 1;
            let seq: Vec<usize> = col.entries().iter().map(|&e| e - 1).collect();
            t.get(j, &seq).clone()
        });
        Ok(AltMultiMap { matrix })
    }

    pub fn arity(&self) -> usize {
        self.matrix.p_prime()
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.n_prime()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.n()
    }

    pub fn matrix(&self) -> &AltMatrix {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Applies the map: the matrix against the wedge of the arguments.
    pub fn eval(&self, args: &[&[Rational]]) -> Result<Vec<Rational>> {
        if args.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: args.len(),
            });
        }
        let n = self.domain_dim();
        let mut acc = AltMatrix::unit(n, n);
        for arg in args {
            if arg.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: arg.len(),
                });
            }
            acc = acc.wedge(&alt_column_vector(arg))?;
        }
        alt_column_entries(&self.matrix.matmul(&acc)?)
    }
}

/// A bilinear pairing of two spaces held as a weight-(1, 2) matrix over
/// their concatenation, applied to the normalized square of the
/// concatenated argument pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearMap {
    left_dim: usize,
    matrix: SymMatrix,
}

impl BilinearMap {
    pub fn new(matrix: SymMatrix, left_dim: usize) -> Result<Self> {
        if matrix.p() != 1 || matrix.p_prime() != 2 {
            return Err(Error::Unsupported(format!(
                "a bilinear map matrix has weights (1, 2), got ({}, {})",
                matrix.p(),
                matrix.p_prime()
            )));
        }
        if left_dim > matrix.n_prime() {
            return Err(Error::DimensionMismatch(format!(
                "left factor dimension {left_dim} exceeds concatenated dimension {}",
                matrix.n_prime()
            )));
        }
        Ok(BilinearMap { left_dim, matrix })
    }

    /// A pairing from raw coefficients `c[k][i][j]` of `x_i y_j` terms:
    /// only mixed square-free columns are populated, so the map kills
    /// `(x, 0)` and `(0, y)` pairs.
    pub fn from_coefficients(
        out_dim: usize,
        left_dim: usize,
        right_dim: usize,
        coeffs: &[Rational],
    ) -> Result<Self> {
        if coeffs.len() != out_dim * left_dim * right_dim {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coefficients, got {}",
                out_dim * left_dim * right_dim,
                coeffs.len()
            )));
        }
        let nc = left_dim + right_dim;
        let mut matrix = SymMatrix::zeros(out_dim, nc, 1, 2);
        for k in 0..out_dim {
            let row = MultiIndex::basis(out_dim, k);
            for i in 0..left_dim {
                for j in 0..right_dim {
                    let col = mixed_column(nc, i, left_dim + j);
                    let value = coeffs[(k * left_dim + i) * right_dim + j].clone();
                    matrix.set_entry(&row, &col, value)?;
                }
            }
        }
        BilinearMap::new(matrix, left_dim)
    }

    /// Lifts the matrix of a symmetric bilinear form on one space to the
    /// pairing form on the doubled space.
    pub fn from_symmetric(c: &SymMatrix) -> Result<Self> {
        if c.p() != 1 || c.p_prime() != 2 {
            return Err(Error::Unsupported(format!(
                "a symmetric bilinear matrix has weights (1, 2), got ({}, {})",
                c.p(),
                c.p_prime()
            )));
        }
        let m = c.n_prime();
        let half = Rational::new(1, 2).expect("nonzero denominator");
        let mut matrix = SymMatrix::zeros(c.n(), 2 * m, 1, 2);
        for k in 0..c.n() {
            let row = MultiIndex::basis(c.n(), k);
            for i in 0..m {
                for j in 0..m {
                    let source = MultiIndex::basis(m, i).add(&MultiIndex::basis(m, j))?;
                    let value = c.entry(&row, &source)? * &half;
                    matrix.set_entry(&row, &mixed_column(2 * m, i, m + j), value)?;
                }
            }
        }
        BilinearMap::new(matrix, m)
    }

    /// Lifts the matrix of an antisymmetric bilinear form on one space
    /// to the pairing form on the doubled space.
    pub fn from_antisymmetric(c: &AltMatrix) -> Result<Self> {
        if c.p() != 1 || c.p_prime() != 2 {
            return Err(Error::Unsupported(format!(
                "an antisymmetric bilinear matrix has weights (1, 2), got ({}, {})",
                c.p(),
                c.p_prime()
            )));
        }
        let m = c.n_prime();
        let mut matrix = SymMatrix::zeros(c.n(), 2 * m, 1, 2);
        for k in 0..c.n() {
            let row_sym = MultiIndex::basis(c.n(), k);
            let row_alt = crate::multiindex::StrictIndex::new(vec![k + 1], c.n())?;
            for i in 0..m {
                for j in 0..m {
                    if i == j {
                        continue;
                    }
                    let (lo, hi) = (i.min(j) + 1, i.max(j) + 1);
                    let source = crate::multiindex::StrictIndex::new(vec![lo, hi], m)?;
                    let mut value = c.entry(&row_alt, &source)?.clone();
                    if i > j {
                        value = -value;
                    }
                    matrix.set_entry(&row_sym, &mixed_column(2 * m, i, m + j), value)?;
                }
            }
        }
        BilinearMap::new(matrix, m)
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.matrix.n_prime() - self.left_dim
    }

    pub fn out_dim(&self) -> usize {
        self.matrix.n()
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.matrix
    }

    /// Applies the pairing to a pair of vectors.
    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.left_dim {
            return Err(Error::LengthMismatch {
                expected: self.left_dim,
                found: x.len(),
            });
        }
        if y.len() != self.right_dim() {
            return Err(Error::LengthMismatch {
                expected: self.right_dim(),
                found: y.len(),
            });
        }
        let concat: Vec<Rational> = x.iter().chain(y).cloned().collect();
        let square = vector_power_normalized(&concat, 2);
        column_entries(&self.matrix.matmul(&square)?)
    }

    /// The same pairing restricted to the strict-index square stratum,
    /// for composition with wedge products.
    pub fn to_alt_pairing(&self) -> AltMatrix {
        let nc = self.matrix.n_prime();
        AltMatrix::from_fn(self.matrix.n(), nc, 1, 2, |row, col| {
            let sym_row = MultiIndex::basis(self.matrix.n(), row.entries()[0] - 1);
            let sym_col = mixed_column(nc, col.entries()[0] - 1, col.entries()[1] - 1);
            self.matrix
                .entry(&sym_row, &sym_col)
                .expect("index in range")
                .clone()
        })
    }
}

/// Weight-2 multi-index `e_i + e_j` over `dim` coordinates (0-based
/// positions, `i != j` not required).
fn mixed_column(dim: usize, i: usize, j: usize) -> MultiIndex {
    let mut entries = vec![0usize; dim];
    entries[i] += 1;
    entries[j] += 1;
    MultiIndex::new(entries)
}

/// 0-based position of the 1 in a weight-1 multi-index.
fn basis_position(idx: &MultiIndex) -> usize {
    idx.entries()
        .iter()
        .position(|&e| e == 1)
        .expect("weight-1 index")
}

/// Expands a multi-index into its sorted 0-based index sequence, e.g.
/// `(2, 0, 1)` into `[0, 0, 2]`.
fn sorted_sequence(idx: &MultiIndex) -> Vec<usize> {
    let mut seq = Vec::with_capacity(idx.weight());
    for (pos, &count) in idx.entries().iter().enumerate() {
        for _ in 0..count {
            seq.push(pos);
        }
    }
    seq
}

/// The pairing product of two symmetric maps: pad both factor matrices
/// into the concatenated codomain, ⊙-multiply, and contract with the
/// pairing matrix. Evaluates as the symmetrized pairing of the two
/// factor evaluations.
pub fn product_sym(a: &SymMultiMap, b: &SymMultiMap, c: &BilinearMap) -> Result<SymMultiMap> {
    if a.domain_dim() != b.domain_dim() {
        return Err(Error::DimensionMismatch(format!(
            "factor domains differ: {} vs {}",
            a.domain_dim(),
            b.domain_dim()
        )));
    }
    if c.left_dim() != a.codomain_dim() || c.right_dim() != b.codomain_dim() {
        return Err(Error::DimensionMismatch(format!(
            "pairing factors ({}, {}) do not match codomains ({}, {})",
            c.left_dim(),
            c.right_dim(),
            a.codomain_dim(),
            b.codomain_dim()
        )));
    }
    let nc = c.left_dim() + c.right_dim();
    let a_pad = a.matrix().padded_embed_rows(0, nc)?;
    let b_pad = b.matrix().padded_embed_rows(c.left_dim(), nc)?;
    let matrix = c.matrix().matmul(&a_pad.odot(&b_pad)?)?;
    SymMultiMap::from_matrix(matrix)
}

/// Shortcut for a symmetric pairing on a shared codomain: half the
/// contraction of the plain ⊙-product. Agrees with [`product_sym`]
/// through [`BilinearMap::from_symmetric`].
pub fn product_sym_symmetric(
    a: &SymMultiMap,
    b: &SymMultiMap,
    c: &SymMatrix,
) -> Result<SymMultiMap> {
    if a.codomain_dim() != b.codomain_dim() || a.codomain_dim() != c.n_prime() {
        return Err(Error::DimensionMismatch(format!(
            "shared codomain expected: {} vs {} vs pairing over {}",
            a.codomain_dim(),
            b.codomain_dim(),
            c.n_prime()
        )));
    }
    let half = Rational::new(1, 2).expect("nonzero denominator");
    let matrix = c.matmul(&a.matrix().odot(b.matrix())?)?.scale(&half);
    SymMultiMap::from_matrix(matrix)
}

/// The pairing product of two antisymmetric maps: pad, wedge, contract
/// with the pairing restricted to the strict square stratum. Evaluates
/// as the signed shuffle sum of pairings of factor evaluations.
pub fn product_alt(a: &AltMultiMap, b: &AltMultiMap, c: &BilinearMap) -> Result<AltMultiMap> {
    if a.domain_dim() != b.domain_dim() {
        return Err(Error::DimensionMismatch(format!(
            "factor domains differ: {} vs {}",
            a.domain_dim(),
            b.domain_dim()
        )));
    }
    if c.left_dim() != a.codomain_dim() || c.right_dim() != b.codomain_dim() {
        return Err(Error::DimensionMismatch(format!(
            "pairing factors ({}, {}) do not match codomains ({}, {})",
            c.left_dim(),
            c.right_dim(),
            a.codomain_dim(),
            b.codomain_dim()
        )));
    }
    let nc = c.left_dim() + c.right_dim();
    let a_pad = a.matrix().padded_embed_rows(0, nc)?;
    let b_pad = b.matrix().padded_embed_rows(c.left_dim(), nc)?;
    let matrix = c.to_alt_pairing().matmul(&a_pad.wedge(&b_pad)?)?;
    AltMultiMap::from_matrix(matrix)
}

/// Shortcut for an antisymmetric pairing on a shared codomain: the
/// contraction of the plain wedge. Agrees with [`product_alt`] through
/// [`BilinearMap::from_antisymmetric`].
pub fn product_alt_antisymmetric(
    a: &AltMultiMap,
    b: &AltMultiMap,
    c: &AltMatrix,
) -> Result<AltMultiMap> {
    if a.codomain_dim() != b.codomain_dim() || a.codomain_dim() != c.n_prime() {
        return Err(Error::DimensionMismatch(format!(
            "shared codomain expected: {} vs {} vs pairing over {}",
            a.codomain_dim(),
            b.codomain_dim(),
            c.n_prime()
        )));
    }
    let matrix = c.matmul(&a.matrix().wedge(b.matrix())?)?;
    AltMultiMap::from_matrix(matrix)
}
