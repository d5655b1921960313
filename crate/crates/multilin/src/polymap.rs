//! Polynomial maps as block matrices and their composition calculus.
//!
//! A [`PolyMap`] stores one row-weight-1 block per column weight, so the
//! map is evaluated as the flat product of its block row against the
//! column of normalized vector powers. [`BlockMatrix::exp`] builds the
//! ⊙-power series `E + M/1! + M^(2)/2! + ...` under explicit truncation
//! bounds; for polynomial-map matrices the series is exact because the
//! needed weights are finite, and it linearizes composition:
//! `compose(f, g)` is the flat product of `f`'s block row against
//! `exp` of `g`'s block matrix.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::rational::Rational;
use crate::sym::{column_entries, vector_power_normalized, SymMatrix};

/// A finitely supported block matrix: weight pair `(p, p')` to stratum
/// matrix; absent blocks are zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockMatrix {
    n: usize,
    n_prime: usize,
    blocks: BTreeMap<(usize, usize), SymMatrix>,
}

impl BlockMatrix {
    pub fn new(n: usize, n_prime: usize) -> Self {
        BlockMatrix {
            n,
            n_prime,
            blocks: BTreeMap::new(),
        }
    }

    /// The multiplicative unit: a single weight-(0,0) block with entry 1.
    pub fn unit(n: usize, n_prime: usize) -> Self {
        let mut m = BlockMatrix::new(n, n_prime);
        m.blocks.insert((0, 0), SymMatrix::unit(n, n_prime));
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn n_prime(&self) -> usize {
        self.n_prime
    }

    /// Stores a block at its own weight pair; zero blocks are dropped.
    pub fn insert_block(&mut self, block: SymMatrix) -> Result<()> {
        if block.n() != self.n || block.n_prime() != self.n_prime {
            return Err(Error::DimensionMismatch(format!(
                "block base ({},{}) does not match matrix base ({},{})",
                block.n(),
                block.n_prime(),
                self.n,
                self.n_prime
            )));
        }
        if block.is_zero() {
            self.blocks.remove(&(block.p(), block.p_prime()));
        } else {
            self.blocks.insert((block.p(), block.p_prime()), block);
        }
        Ok(())
    }

    fn add_into(&mut self, block: SymMatrix) -> Result<()> {
        let key = (block.p(), block.p_prime());
        let merged = match self.blocks.remove(&key) {
            Some(existing) => existing.add(&block)?,
            None => block,
        };
        self.insert_block(merged)
    }

    pub fn block(&self, p: usize, p_prime: usize) -> Option<&SymMatrix> {
        self.blocks.get(&(p, p_prime))
    }

    pub fn blocks(&self) -> impl Iterator<Item = &SymMatrix> {
        self.blocks.values()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Largest row weight among the stored blocks.
    pub fn max_row_weight(&self) -> usize {
        self.blocks.keys().map(|&(p, _)| p).max().unwrap_or(0)
    }

    /// Largest column weight among the stored blocks.
    pub fn max_col_weight(&self) -> usize {
        self.blocks.keys().map(|&(_, pp)| pp).max().unwrap_or(0)
    }

    /// Blockwise-bilinear extension of ⊙, keeping only result blocks
    /// within the given weight bounds.
    pub fn odot_truncated(
        &self,
        other: &BlockMatrix,
        max_row: usize,
        max_col: usize,
    ) -> Result<BlockMatrix> {
        if self.n != other.n || self.n_prime != other.n_prime {
            return Err(Error::DimensionMismatch(format!(
                "base dimensions ({},{}) vs ({},{})",
                self.n, self.n_prime, other.n, other.n_prime
            )));
        }
        let mut out = BlockMatrix::new(self.n, self.n_prime);
        for (&(p, pp), a) in &self.blocks {
            for (&(q, qp), b) in &other.blocks {
                if p + q > max_row || pp + qp > max_col {
                    continue;
                }
                out.add_into(a.odot(b)?)?;
            }
        }
        Ok(out)
    }

    /// Blockwise flat product: result block `(p, c')` sums the chained
    /// products over the matching inner weight.
    pub fn matmul(&self, other: &BlockMatrix) -> Result<BlockMatrix> {
        if self.n_prime != other.n {
            return Err(Error::DimensionMismatch(format!(
                "inner base dimensions differ: {} vs {}",
                self.n_prime, other.n
            )));
        }
        let mut out = BlockMatrix::new(self.n, other.n_prime);
        for (&(_, m), a) in &self.blocks {
            for (&(q, _), b) in &other.blocks {
                if q != m {
                    continue;
                }
                out.add_into(a.matmul(b)?)?;
            }
        }
        Ok(out)
    }

    /// The ⊙-power series `E + M/1! + M^(2)/2! + ...` truncated at the
    /// given weight bounds.
    ///
    /// Every stored block must have positive row weight; then the i-th
    /// power contributes only to row weights >= i and the series is a
    /// finite sum within the bounds.
    pub fn exp(&self, max_row: usize, max_col: usize) -> Result<BlockMatrix> {
        if self.blocks.keys().any(|&(p, _)| p == 0) {
            return Err(Error::Unsupported(
                "exp needs all blocks in positive row weight; a weight-(0, *) block \
                 would contribute at every order"
                    .into(),
            ));
        }
        let mut out = BlockMatrix::unit(self.n, self.n_prime);
        let mut power = BlockMatrix::unit(self.n, self.n_prime);
        for i in 1..=max_row {
            power = power.odot_truncated(self, max_row, max_col)?;
            if power.is_zero() {
                break;
            }
            let inv_fact = Rational::factorial(i).recip().expect("factorial nonzero");
            for block in power.blocks.values() {
                out.add_into(block.scale(&inv_fact))?;
            }
        }
        Ok(out)
    }
}

/// The column of normalized powers of a point: blocks `(p, 0)` hold
/// `x^(p)/p!` for `p = 0..=max_weight`.
pub fn exp_point(x: &[Rational], max_weight: usize) -> BlockMatrix {
    let n = x.len();
    let mut out = BlockMatrix::new(n, n);
    for p in 0..=max_weight {
        let block = vector_power_normalized(x, p);
        if !block.is_zero() {
            out.blocks.insert((p, 0), block);
        }
    }
    out
}

/// A polynomial map held as its row of blocks: `blocks[d]` is the
/// weight-(1, d) coefficient matrix, so the map sends `x` to
/// `sum_d blocks[d] · x^(d)/d!`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMap {
    n_in: usize,
    n_out: usize,
    blocks: Vec<SymMatrix>,
}

impl PolyMap {
    /// Builds from the block list; `blocks[d]` must be a weight-(1, d)
    /// matrix over `(n_out, n_in)`. Trailing zero blocks are trimmed so
    /// the degree is minimal; the zero map keeps degree 0.
    pub fn from_blocks(n_in: usize, n_out: usize, mut blocks: Vec<SymMatrix>) -> Result<Self> {
        if blocks.is_empty() {
            blocks.push(SymMatrix::zeros(n_out, n_in, 1, 0));
        }
        for (d, block) in blocks.iter().enumerate() {
            if block.n() != n_out
                || block.n_prime() != n_in
                || block.p() != 1
                || block.p_prime() != d
            {
                return Err(Error::DimensionMismatch(format!(
                    "block {d} must be a weight-(1, {d}) matrix over ({n_out}, {n_in}), \
                     got ({}, {}) over ({}, {})",
                    block.p(),
                    block.p_prime(),
                    block.n(),
                    block.n_prime()
                )));
            }
        }
        while blocks.len() > 1 && blocks.last().is_some_and(SymMatrix::is_zero) {
            blocks.pop();
        }
        Ok(PolyMap {
            n_in,
            n_out,
            blocks,
        })
    }

    /// The zero map (degree 0, zero constant block).
    pub fn zero(n_in: usize, n_out: usize) -> Self {
        PolyMap {
            n_in,
            n_out,
            blocks: vec![SymMatrix::zeros(n_out, n_in, 1, 0)],
        }
    }

    pub fn identity(n: usize) -> Self {
        PolyMap {
            n_in: n,
            n_out: n,
            blocks: vec![SymMatrix::zeros(n, n, 1, 0), SymMatrix::identity(n)],
        }
    }

    /// The constant map with the given value.
    pub fn constant(n_in: usize, value: &[Rational]) -> Self {
        let n_out = value.len();
        let dense = DenseMatrix::from_entries(n_out, 1, value.to_vec()).expect("column shape");
        let block = SymMatrix::from_dense(n_out, n_in, 1, 0, &dense).expect("constant block");
        PolyMap {
            n_in,
            n_out,
            blocks: vec![block],
        }
    }

    /// The linear map given by an ordinary matrix.
    pub fn linear(m: &DenseMatrix) -> Self {
        let (n_out, n_in) = (m.rows(), m.cols());
        let block = SymMatrix::from_dense(n_out, n_in, 1, 1, m).expect("linear block");
        PolyMap {
            n_in,
            n_out,
            blocks: vec![SymMatrix::zeros(n_out, n_in, 1, 0), block],
        }
    }

    pub fn n_in(&self) -> usize {
        self.n_in
    }

    pub fn n_out(&self) -> usize {
        self.n_out
    }

    pub fn degree(&self) -> usize {
        self.blocks.len() - 1
    }

    pub fn blocks(&self) -> &[SymMatrix] {
        &self.blocks
    }

    pub fn block(&self, d: usize) -> Option<&SymMatrix> {
        self.blocks.get(d)
    }

    /// Exact evaluation: the block row applied to the normalized powers
    /// of the point.
    pub fn eval(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.n_in {
            return Err(Error::LengthMismatch {
                expected: self.n_in,
                found: x.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.n_out];
        for (d, block) in self.blocks.iter().enumerate() {
            if block.is_zero() {
                continue;
            }
            let power = vector_power_normalized(x, d);
            let column = column_entries(&block.matmul(&power)?)?;
            for (acc, v) in out.iter_mut().zip(column) {
                *acc += &v;
            }
        }
        Ok(out)
    }

    /// The block-matrix form (only row-weight-1 blocks).
    pub fn to_block_matrix(&self) -> BlockMatrix {
        let mut m = BlockMatrix::new(self.n_out, self.n_in);
        for block in &self.blocks {
            if !block.is_zero() {
                m.blocks.insert((block.p(), block.p_prime()), block.clone());
            }
        }
        m
    }

    /// Composition `self ∘ inner`: the block row of `self` times the
    /// exponential of `inner`'s block matrix. Exact: the column bound
    /// `deg(self) * deg(inner)` covers every block of the composite.
    pub fn compose(&self, inner: &PolyMap) -> Result<PolyMap> {
        if self.n_in != inner.n_out {
            return Err(Error::DimensionMismatch(format!(
                "outer map takes {} inputs, inner map produces {}",
                self.n_in, inner.n_out
            )));
        }
        let d_outer = self.degree();
        let bound = d_outer * inner.degree();
        let exp = inner.to_block_matrix().exp(d_outer, bound)?;
        let mut blocks = Vec::with_capacity(bound + 1);
        for c in 0..=bound {
            let mut acc = SymMatrix::zeros(self.n_out, inner.n_in, 1, c);
            for (d, outer_block) in self.blocks.iter().enumerate() {
                let Some(exp_block) = exp.block(d, c) else {
                    continue;
                };
                acc = acc.add(&outer_block.matmul(exp_block)?)?;
            }
            blocks.push(acc);
        }
        PolyMap::from_blocks(inner.n_in, self.n_out, blocks)
    }

    /// Rewrites the map under coordinate changes: `s` maps old to new
    /// output coordinates, `t_inv` maps new input coordinates back to
    /// old ones (the caller supplies the inverse change; see
    /// [`PolyMap::invert_linear`] for linear changes).
    pub fn change_of_variables(&self, s: &PolyMap, t_inv: &PolyMap) -> Result<PolyMap> {
        s.compose(self)?.compose(t_inv)
    }

    /// Inverts a map of degree <= 1 with invertible linear part:
    /// `x' = c + Tx` becomes `x = T^{-1} x' - T^{-1} c`.
    pub fn invert_linear(&self) -> Result<PolyMap> {
        if self.degree() > 1 {
            return Err(Error::Unsupported(format!(
                "only degree <= 1 maps can be inverted, got degree {}",
                self.degree()
            )));
        }
        if self.n_in != self.n_out {
            return Err(Error::NotSquare);
        }
        let linear = match self.block(1) {
            Some(block) => block.to_dense(),
            None => return Err(Error::Singular),
        };
        let inv = linear.inverse()?;
        let constant = column_entries(&self.blocks[0])?;
        let shifted: Vec<Rational> = inv.matvec(&constant)?.into_iter().map(|v| -v).collect();
        let const_block = SymMatrix::from_dense(
            self.n_in,
            self.n_out,
            1,
            0,
            &DenseMatrix::from_entries(self.n_in, 1, shifted)?,
        )?;
        let linear_block = SymMatrix::from_dense(self.n_in, self.n_out, 1, 1, &inv)?;
        PolyMap::from_blocks(self.n_out, self.n_in, vec![const_block, linear_block])
    }
}

/// Change of basis for a homogeneous coefficient block `a` of column
/// weight `k`: `s · a · (t_inv)^(k)/k!` through the flat layout. `s`
/// changes output coordinates, `t_inv` is the inverse input change.
pub fn gl_action_homogeneous(
    a: &SymMatrix,
    s: &DenseMatrix,
    t_inv: &DenseMatrix,
) -> Result<SymMatrix> {
    if a.p() != 1 {
        return Err(Error::Unsupported(format!(
            "the action needs a row-weight-1 block, got {}",
            a.p()
        )));
    }
    if s.rows() != s.cols() || s.cols() != a.n() {
        return Err(Error::DimensionMismatch(format!(
            "output change must be {0}x{0}, got {1}x{2}",
            a.n(),
            s.rows(),
            s.cols()
        )));
    }
    if t_inv.rows() != t_inv.cols() || t_inv.rows() != a.n_prime() {
        return Err(Error::DimensionMismatch(format!(
            "input change must be {0}x{0}, got {1}x{2}",
            a.n_prime(),
            t_inv.rows(),
            t_inv.cols()
        )));
    }
    let s_sym = SymMatrix::from_dense(a.n(), a.n(), 1, 1, s)?;
    let t_sym = SymMatrix::from_dense(a.n_prime(), a.n_prime(), 1, 1, t_inv)?;
    let powered = t_sym.sym_power(a.p_prime())?;
    s_sym.matmul(a)?.matmul(&powered)
}
