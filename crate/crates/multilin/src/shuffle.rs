//! Permutations, block shuffles and their decomposition bijections.
//!
//! A shuffle of block sizes `(p, q, ...)` is a permutation that is
//! increasing on each consecutive block of positions. Shuffles drive the
//! signed convolution of the antisymmetric matrix product, and the
//! decomposition bijections below justify its associativity.
//!
//! Permutations map 0-based positions to 0-based values; `compose(σ, τ)`
//! applies `τ` first.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A permutation of `{0, .., m-1}` with cached sign.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
    sign: i8,
}

impl Permutation {
    /// Validates that `images` is a bijection and caches its parity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &v in &images {
            if v >= m || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "images {images:?} are not a bijection of 0..{m}"
                )));
            }
            seen[v] = true;
        }
        let sign = sign_of(&images);
        Ok(Permutation { images, sign })
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m).collect(),
            sign: 1,
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of one position.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Parity: +1 for even, -1 for odd.
    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        let images = other.images.iter().map(|&i| self.images[i]).collect();
        Ok(Permutation {
            images,
            sign: self.sign * other.sign,
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation {
            images,
            sign: self.sign,
        }
    }

    /// Whether the images are increasing on each consecutive block of
    /// the given sizes (sizes must sum to the length).
    pub fn is_block_shuffle(&self, sizes: &[usize]) -> bool {
        if sizes.iter().sum::<usize>() != self.len() {
            return false;
        }
        let mut start = 0;
        for &size in sizes {
            if !self.images[start..start + size]
                .windows(2)
                .all(|w| w[0] < w[1])
            {
                return false;
            }
            start += size;
        }
        true
    }
}

fn sign_of(images: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..images.len() {
        for j in (i + 1)..images.len() {
            if images[i] > images[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// All two-block shuffles of sizes `(p, q)`, in lexicographic order of
/// the first-block images. There are `C(p+q, p)` of them.
pub fn shuffles(p: usize, q: usize) -> Vec<Permutation> {
    block_shuffles(&[p, q])
}

/// All shuffles of the given consecutive block sizes, in lexicographic
/// order of the image sequence.
pub fn block_shuffles(sizes: &[usize]) -> Vec<Permutation> {
    let m: usize = sizes.iter().sum();
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(m);
    let mut taken = vec![false; m];
    fill_block_shuffles(sizes, m, &mut images, &mut taken, &mut out);
    out
}

fn fill_block_shuffles(
    sizes: &[usize],
    m: usize,
    images: &mut Vec<usize>,
    taken: &mut Vec<bool>,
    out: &mut Vec<Permutation>,
) {
    let Some((&size, rest)) = sizes.split_first() else {
        let perm = Permutation {
            images: images.clone(),
            sign: sign_of(images),
        };
        out.push(perm);
        return;
    };
    // Choose an increasing tuple of free values for this block.
    fill_block_choice(size, 0, m, images, taken, rest, out);
}

fn fill_block_choice(
    remaining: usize,
    min_value: usize,
    m: usize,
    images: &mut Vec<usize>,
    taken: &mut Vec<bool>,
    rest: &[usize],
    out: &mut Vec<Permutation>,
) {
    if remaining == 0 {
        fill_block_shuffles(rest, m, images, taken, out);
        return;
    }
    for v in min_value..m {
        if taken[v] {
            continue;
        }
        taken[v] = true;
        images.push(v);
        fill_block_choice(remaining - 1, v + 1, m, images, taken, rest, out);
        images.pop();
        taken[v] = false;
    }
}

/// Splits a three-block shuffle `s0 ∈ S_{[p]+[q]+[r]}` as `s0 = σ ∘ τ`
/// with `σ ∈ S_{[p]+[q+r]}` and `τ` fixing the first `p` positions while
/// shuffling the remaining `(q, r)` blocks. The decomposition is unique
/// and multiplies signs.
pub fn shuffle_decompose(
    s0: &Permutation,
    p: usize,
    q: usize,
    r: usize,
) -> Result<(Permutation, Permutation)> {
    check_shuffle(s0, &[p, q, r])?;
    // σ keeps the first block and sorts the merged tail values.
    let mut tail: Vec<usize> = s0.images[p..].to_vec();
    tail.sort_unstable();
    let mut images = s0.images[..p].to_vec();
    images.extend(tail);
    let sigma = Permutation {
        sign: sign_of(&images),
        images,
    };
    let tau = sigma.inverse().compose(s0)?;
    Ok((sigma, tau))
}

/// Mirror decomposition: `s0 = σ ∘ τ` with `σ ∈ S_{[p+q]+[r]}` and `τ`
/// fixing the last `r` positions while shuffling the `(p, q)` blocks.
pub fn shuffle_decompose_mirror(
    s0: &Permutation,
    p: usize,
    q: usize,
    r: usize,
) -> Result<(Permutation, Permutation)> {
    check_shuffle(s0, &[p, q, r])?;
    let mut head: Vec<usize> = s0.images[..p + q].to_vec();
    head.sort_unstable();
    head.extend_from_slice(&s0.images[p + q..]);
    let sigma = Permutation {
        sign: sign_of(&head),
        images: head,
    };
    let tau = sigma.inverse().compose(s0)?;
    Ok((sigma, tau))
}

fn check_shuffle(s0: &Permutation, sizes: &[usize]) -> Result<()> {
    if !s0.is_block_shuffle(sizes) {
        return Err(Error::NotAShuffle(format!(
            "{:?} is not increasing on blocks {sizes:?}",
            s0.images
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_from_inversions() {
        assert_eq!(Permutation::identity(4).sign(), 1);
        assert_eq!(Permutation::from_images(vec![1, 0]).unwrap().sign(), -1);
        assert_eq!(Permutation::from_images(vec![2, 0, 1]).unwrap().sign(), 1);
    }

    #[test]
    fn invalid_images_rejected() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
    }

    #[test]
    fn shuffles_one_one() {
        let s = shuffles(1, 1);
        assert_eq!(s.len(), 2);
        assert_eq!(s[0], Permutation::identity(2));
        assert_eq!(s[0].sign(), 1);
        assert_eq!(s[1].images(), &[1, 0]);
        assert_eq!(s[1].sign(), -1);
    }

    #[test]
    fn shuffles_empty_first_block() {
        let s = shuffles(0, 3);
        assert_eq!(s, vec![Permutation::identity(3)]);
    }

    #[test]
    fn shuffles_two_one_signs() {
        let s = shuffles(2, 1);
        assert_eq!(s.len(), 3);
        let signs: Vec<i8> = s.iter().map(|p| p.sign()).collect();
        assert_eq!(signs, vec![1, -1, 1]);
        // Lexicographic order of first-block images.
        assert_eq!(s[0].images(), &[0, 1, 2]);
        assert_eq!(s[1].images(), &[0, 2, 1]);
        assert_eq!(s[2].images(), &[1, 2, 0]);
    }

    #[test]
    fn shuffle_count_is_binomial() {
        for p in 0..=4 {
            for q in 0..=4 {
                let s = shuffles(p, q);
                assert_eq!(s.len(), crate::rational::binomial(p + q, p));
                assert!(s.iter().all(|perm| perm.is_block_shuffle(&[p, q])));
            }
        }
    }

    #[test]
    fn decompose_identity() {
        let id = Permutation::identity(4);
        let (sigma, tau) = shuffle_decompose(&id, 1, 2, 1).unwrap();
        assert_eq!(sigma, id);
        assert_eq!(tau, id);
    }

    #[test]
    fn decompose_roundtrips_and_is_bijective() {
        for (p, q, r) in [(1, 1, 1), (1, 2, 1), (2, 1, 2), (0, 2, 1)] {
            let all = block_shuffles(&[p, q, r]);
            let outer = block_shuffles(&[p, q + r]);
            let mut inner_count = 0;
            let mut seen = Vec::new();
            for s0 in &all {
                let (sigma, tau) = shuffle_decompose(s0, p, q, r).unwrap();
                assert!(sigma.is_block_shuffle(&[p, q + r]));
                assert!(tau.images()[..p].iter().enumerate().all(|(i, &v)| i == v));
                assert!(tau.is_block_shuffle(&[p, q, r]));
                assert_eq!(&sigma.compose(&tau).unwrap(), s0);
                assert_eq!(sigma.sign() * tau.sign(), s0.sign());
                assert!(!seen.contains(&(sigma.clone(), tau.clone())));
                seen.push((sigma, tau));
            }
            // Count check: |S_{[p]+[q+r]}| * |S_{(p)+[q]+[r]}| = |S_{[p]+[q]+[r]}|.
            inner_count += block_shuffles(&[q, r]).len();
            assert_eq!(outer.len() * inner_count, all.len());
        }
    }

    #[test]
    fn decompose_mirror_roundtrips() {
        for (p, q, r) in [(1, 1, 1), (1, 2, 1), (2, 2, 1)] {
            for s0 in block_shuffles(&[p, q, r]) {
                let (sigma, tau) = shuffle_decompose_mirror(&s0, p, q, r).unwrap();
                assert!(sigma.is_block_shuffle(&[p + q, r]));
                assert!(tau.images()[p + q..]
                    .iter()
                    .enumerate()
                    .all(|(i, &v)| p + q + i == v));
                assert!(tau.is_block_shuffle(&[p, q, r]));
                assert_eq!(sigma.compose(&tau).unwrap(), s0);
                assert_eq!(sigma.sign() * tau.sign(), s0.sign());
            }
        }
    }

    #[test]
    fn decompose_rejects_non_shuffles() {
        let swap = Permutation::from_images(vec![1, 0, 2]).unwrap();
        assert!(shuffle_decompose(&swap, 2, 1, 0).is_err());
    }
}
