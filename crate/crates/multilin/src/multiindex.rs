//! Multi-indices and strictly increasing index tuples.
//!
//! A [`MultiIndex`] is a tuple of nonnegative integer exponents; the set
//! of multi-indices of a fixed weight forms the row/column index set of
//! the symmetric matrix family. The graded order sorts by weight first
//! and, within a weight, puts tuples with a larger leading entry earlier.
//! All dense storage in this crate is laid out in graded-order rank, and
//! ranks are computed combinatorially so layouts are reproducible.
//!
//! A [`StrictIndex`] is a strictly increasing tuple with entries in
//! `1..=n`; these index the antisymmetric matrix family and are laid out
//! in colexicographic order (compare last entries first).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::{binomial, binomial_big, factorial_big, Rational};

/// A tuple of nonnegative integer exponents.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(entries: Vec<usize>) -> Self {
        MultiIndex(entries)
    }

    /// The zero index of the given dimension (weight 0).
    pub fn zero(dim: usize) -> Self {
        MultiIndex(vec![0; dim])
    }

    /// The standard basis index `e_pos` (1 at `pos`, 0 elsewhere).
    pub fn basis(dim: usize, pos: usize) -> Self {
        let mut entries = vec![0; dim];
        entries[pos] = 1;
        MultiIndex(entries)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Sum of the entries.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Product of entry factorials.
    pub fn factorial(&self) -> BigUint {
        self.0
            .iter()
            .fold(BigUint::one(), |acc, &e| acc * factorial_big(e))
    }

    /// Componentwise domination: every entry of `self` is at most the
    /// matching entry of `other`.
    pub fn le_componentwise(&self, other: &MultiIndex) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise sum.
    pub fn add(&self, other: &MultiIndex) -> Result<MultiIndex> {
        if self.0.len() != other.0.len() {
            return Err(Error::LengthMismatch {
                expected: self.0.len(),
                found: other.0.len(),
            });
        }
        Ok(MultiIndex(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Componentwise difference; `None` when `other` does not dominate.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        if self.0.len() != other.0.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    /// Graded comparison: weight first; within a weight the tuple with
    /// the larger entry at the first differing coordinate sorts earlier.
    ///
    /// Errors when the tuples have different lengths.
    pub fn cmp_graded(&self, other: &MultiIndex) -> Result<Ordering> {
        if self.0.len() != other.0.len() {
            return Err(Error::LengthMismatch {
                expected: self.0.len(),
                found: other.0.len(),
            });
        }
        match self.weight().cmp(&other.weight()) {
            Ordering::Equal => {}
            ord => return Ok(ord),
        }
        for (a, b) in self.0.iter().zip(&other.0) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                // Larger entry first within a weight.
                Ordering::Greater => return Ok(Ordering::Less),
                Ordering::Less => return Ok(Ordering::Greater),
            }
        }
        Ok(Ordering::Equal)
    }

    /// 0-based position of this index within its weight stratum, in
    /// graded order.
    pub fn rank(&self) -> usize {
        let mut rank = 0;
        let mut weight = self.weight();
        let mut dim = self.0.len();
        for &entry in &self.0 {
            if dim == 0 {
                break;
            }
            // Indices whose entry here exceeds `entry` sort earlier.
            for c in (entry + 1)..=weight {
                rank += stratum_size(dim - 1, weight - c);
            }
            weight -= entry;
            dim -= 1;
        }
        rank
    }

    /// Monomial evaluation `x^self = Π x_i^{e_i}`.
    pub fn monomial(&self, x: &[Rational]) -> Result<Rational> {
        if x.len() != self.0.len() {
            return Err(Error::LengthMismatch {
                expected: self.0.len(),
                found: x.len(),
            });
        }
        let mut acc = Rational::one();
        for (xi, &e) in x.iter().zip(&self.0) {
            for _ in 0..e {
                acc *= xi;
            }
        }
        Ok(acc)
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Number of weight-`p` multi-indices of dimension `n`, i.e.
/// `C(p + n - 1, n - 1)`. Dimension 0 carries a single weight-0 index.
pub fn stratum_size(n: usize, p: usize) -> usize {
    if n == 0 {
        return if p == 0 { 1 } else { 0 };
    }
    binomial(p + n - 1, n - 1)
}

/// All weight-`p` multi-indices of dimension `n` in graded order.
pub fn stratum(n: usize, p: usize) -> Vec<MultiIndex> {
    let mut out = Vec::with_capacity(stratum_size(n, p));
    let mut prefix = Vec::with_capacity(n);
    fill_stratum(n, p, &mut prefix, &mut out);
    out
}

fn fill_stratum(n: usize, p: usize, prefix: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
    if n == 0 {
        if p == 0 {
            out.push(MultiIndex::new(prefix.clone()));
        }
        return;
    }
    if n == 1 {
        prefix.push(p);
        out.push(MultiIndex::new(prefix.clone()));
        prefix.pop();
        return;
    }
    for c in (0..=p).rev() {
        prefix.push(c);
        fill_stratum(n - 1, p - c, prefix, out);
        prefix.pop();
    }
}

/// Inverse of [`MultiIndex::rank`] within the `(n, p)` stratum.
pub fn unrank(n: usize, p: usize, rank: usize) -> Result<MultiIndex> {
    let size = stratum_size(n, p);
    if rank >= size {
        return Err(Error::RankOutOfRange { rank, size });
    }
    let mut entries = Vec::with_capacity(n);
    let mut rank = rank;
    let mut weight = p;
    for dim in (1..=n).rev() {
        if dim == 1 {
            entries.push(weight);
            break;
        }
        let mut entry = weight;
        loop {
            let block = stratum_size(dim - 1, weight - entry);
            if rank < block {
                break;
            }
            rank -= block;
            entry -= 1;
        }
        entries.push(entry);
        weight -= entry;
    }
    Ok(MultiIndex::new(entries))
}

/// Product of per-coordinate binomials `Π C(a_i, b_i)`.
///
/// Total: evaluates to 0 whenever `b` does not divide into `a`
/// componentwise, so product sums need no cone bookkeeping.
pub fn multi_binomial(a: &MultiIndex, b: &MultiIndex) -> Rational {
    if a.dim() != b.dim() || !b.le_componentwise(a) {
        return Rational::zero();
    }
    let mut acc = BigUint::one();
    for (&ai, &bi) in a.entries().iter().zip(b.entries()) {
        acc *= binomial_big(ai, bi);
    }
    Rational::from(acc)
}

/// Multinomial coefficient `C(|a|, a) = |a|! / a!`.
pub fn multinomial(a: &MultiIndex) -> Rational {
    let mut acc = factorial_big(a.weight());
    acc /= a.factorial();
    Rational::from(acc)
}

/// A strictly increasing tuple with entries in `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictIndex(Vec<usize>);

impl StrictIndex {
    /// Validates strict increase and the `1..=n` bound.
    pub fn new(entries: Vec<usize>, n: usize) -> Result<Self> {
        for (i, &e) in entries.iter().enumerate() {
            if e < 1 || e > n {
                return Err(Error::InvalidStrictIndex(fmt_entry_oob(e, n)));
            }
            if i > 0 && entries[i - 1] >= e {
                return Err(Error::InvalidStrictIndex(String::from(
                    "entries must be strictly increasing",
                )));
            }
        }
        Ok(StrictIndex(entries))
    }

    /// The empty tuple (the single element of the weight-0 stratum).
    pub fn empty() -> Self {
        StrictIndex(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based entries.
    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Colexicographic position within the `(n, p)` stratum: compare the
    /// last entries first. Independent of `n`.
    pub fn rank(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| binomial(e - 1, i + 1))
            .sum()
    }

    /// Concatenation of two sub-tuples picked out by positions; callers
    /// guarantee the result is strictly increasing.
    pub(crate) fn from_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] < w[1]));
        StrictIndex(entries)
    }
}

impl fmt::Debug for StrictIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

fn fmt_entry_oob(e: usize, n: usize) -> String {
    use alloc::format;
    format!("entry {e} outside 1..={n}")
}

/// Number of strict `p`-tuples in `1..=n`, i.e. `C(n, p)`.
pub fn strict_stratum_size(n: usize, p: usize) -> usize {
    binomial(n, p)
}

/// All strict `p`-tuples in `1..=n`, in colexicographic order.
pub fn strict_stratum(n: usize, p: usize) -> Vec<StrictIndex> {
    let mut out = Vec::with_capacity(strict_stratum_size(n, p));
    if p > n {
        return out;
    }
    let mut current: Vec<usize> = (1..=p).collect();
    loop {
        out.push(StrictIndex(current.clone()));
        // Next tuple in colex: bump the leftmost entry that can move
        // without touching its right neighbour, resetting the prefix.
        let mut i = 0;
        loop {
            if i == p {
                return out;
            }
            let limit = if i + 1 < p { current[i + 1] - 1 } else { n };
            if current[i] < limit {
                current[i] += 1;
                for (j, slot) in current.iter_mut().enumerate().take(i) {
                    *slot = j + 1;
                }
                break;
            }
            i += 1;
        }
    }
}

/// Inverse of [`StrictIndex::rank`] within the `(n, p)` stratum.
pub fn unrank_strict(n: usize, p: usize, rank: usize) -> Result<StrictIndex> {
    let size = strict_stratum_size(n, p);
    if rank >= size {
        return Err(Error::RankOutOfRange { rank, size });
    }
    let mut entries = vec![0usize; p];
    let mut rank = rank;
    let mut upper = n;
    for i in (1..=p).rev() {
        // Largest e with C(e-1, i) <= rank.
        let mut e = i;
        while e <= upper && binomial(e, i) <= rank {
            e += 1;
        }
        rank -= binomial(e - 1, i);
        entries[i - 1] = e;
        upper = e - 1;
    }
    Ok(StrictIndex(entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(entries: &[usize]) -> MultiIndex {
        MultiIndex::new(entries.to_vec())
    }

    #[test]
    fn graded_order_examples() {
        assert_eq!(
            mi(&[2, 0]).cmp_graded(&mi(&[1, 1])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            mi(&[0, 0]).cmp_graded(&mi(&[0, 0])).unwrap(),
            Ordering::Equal
        );
        assert_eq!(
            mi(&[1, 0, 0]).cmp_graded(&mi(&[0, 0, 2])).unwrap(),
            Ordering::Less
        );
        assert!(mi(&[1, 0]).cmp_graded(&mi(&[1, 0, 0])).is_err());
    }

    #[test]
    fn rank_matches_enumeration_order() {
        for n in 0..=4 {
            for p in 0..=4 {
                let stratum = stratum(n, p);
                assert_eq!(stratum.len(), stratum_size(n, p));
                for (i, idx) in stratum.iter().enumerate() {
                    assert_eq!(idx.rank(), i, "rank of {idx:?}");
                    assert_eq!(&unrank(n, p, i).unwrap(), idx);
                }
                // Enumeration agrees with the graded comparison.
                for w in stratum.windows(2) {
                    assert_eq!(w[0].cmp_graded(&w[1]).unwrap(), Ordering::Less);
                }
            }
        }
        assert!(unrank(2, 2, 3).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(mi(&[2, 0]).rank(), 0);
        assert_eq!(mi(&[1, 1]).rank(), 1);
        assert_eq!(mi(&[0, 2]).rank(), 2);
        assert_eq!(mi(&[7]).rank(), 0);
        assert_eq!(mi(&[1, 0, 0]).rank(), 0);
        assert_eq!(mi(&[0, 1, 0]).rank(), 1);
        assert_eq!(mi(&[0, 0, 1]).rank(), 2);
    }

    #[test]
    fn dimension_zero_stratum() {
        assert_eq!(stratum_size(0, 0), 1);
        assert_eq!(stratum_size(0, 3), 0);
        assert_eq!(stratum(0, 0), vec![MultiIndex::new(vec![])]);
        assert!(stratum(0, 2).is_empty());
    }

    #[test]
    fn multi_binomial_examples() {
        assert_eq!(
            multi_binomial(&mi(&[2, 0]), &mi(&[1, 0])),
            Rational::from(2)
        );
        assert_eq!(multi_binomial(&mi(&[3, 1]), &mi(&[3, 1])), Rational::one());
        assert_eq!(multi_binomial(&mi(&[1, 1]), &mi(&[2, 0])), Rational::zero());
    }

    #[test]
    fn multi_binomial_vandermonde() {
        // Summing over one weight stratum of the lower argument gives the
        // scalar binomial of the weights.
        for a in [mi(&[2, 1]), mi(&[0, 3]), mi(&[1, 1, 2])] {
            let total = a.weight();
            for p in 0..=total {
                let sum: Rational = stratum(a.dim(), p)
                    .iter()
                    .map(|b| multi_binomial(&a, b))
                    .sum();
                assert_eq!(sum, Rational::from(binomial_big(total, p)));
            }
        }
    }

    #[test]
    fn translation_compatible_order() {
        let stratum2 = stratum(3, 2);
        let shift = mi(&[1, 0, 2]);
        for a in &stratum2 {
            for b in &stratum2 {
                let lhs = a.cmp_graded(b).unwrap();
                let rhs = a
                    .add(&shift)
                    .unwrap()
                    .cmp_graded(&b.add(&shift).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn strict_stratum_colex_order() {
        let s = strict_stratum(3, 2);
        let entries: Vec<&[usize]> = s.iter().map(|x| x.entries()).collect();
        assert_eq!(entries, vec![&[1, 2][..], &[1, 3], &[2, 3]]);
        for (i, idx) in s.iter().enumerate() {
            assert_eq!(idx.rank(), i);
            assert_eq!(&unrank_strict(3, 2, i).unwrap(), idx);
        }
    }

    #[test]
    fn strict_stratum_degenerate() {
        assert!(strict_stratum(2, 3).is_empty());
        assert_eq!(strict_stratum(4, 0), vec![StrictIndex::empty()]);
        let s = strict_stratum(5, 3);
        assert_eq!(s.len(), 10);
        for (i, idx) in s.iter().enumerate() {
            assert_eq!(idx.rank(), i);
            assert_eq!(&unrank_strict(5, 3, i).unwrap(), idx);
        }
    }

    #[test]
    fn strict_index_validation() {
        assert!(StrictIndex::new(vec![1, 3], 3).is_ok());
        assert!(StrictIndex::new(vec![3, 1], 3).is_err());
        assert!(StrictIndex::new(vec![1, 1], 3).is_err());
        assert!(StrictIndex::new(vec![0, 1], 3).is_err());
        assert!(StrictIndex::new(vec![1, 4], 3).is_err());
    }

    #[test]
    fn monomial_evaluation() {
        let x = [Rational::from(2), Rational::from(3)];
        assert_eq!(mi(&[2, 1]).monomial(&x).unwrap(), Rational::from(12));
        assert_eq!(mi(&[0, 0]).monomial(&x).unwrap(), Rational::one());
    }
}
