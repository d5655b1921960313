//! Exact calculus for matrices indexed by multi-indices and strictly
//! increasing index tuples.
//!
//! The crate provides two graded matrix families over exact rationals:
//!
//! * [`SymMatrix`]: matrices whose rows and columns are indexed by
//!   multi-indices of fixed weight, carrying the binomial-weighted
//!   convolution product [`SymMatrix::odot`]. Normalized ⊙-powers of an
//!   ordinary matrix act on symmetric powers of vectors, and the
//!   block-matrix exponential built from them linearizes polynomial map
//!   composition ([`PolyMap::compose`]).
//! * [`AltMatrix`]: matrices indexed by strictly increasing tuples,
//!   carrying the signed shuffle convolution [`AltMatrix::wedge`]. The
//!   normalized wedge power of an ordinary matrix is its classical
//!   compound matrix ([`AltMatrix::compound`]).
//!
//! On top of these sit matrix representations for symmetric and
//! antisymmetric multilinear maps ([`SymMultiMap`], [`AltMultiMap`]),
//! their pairing products, and a Hölder-style norm on the antisymmetric
//! family ([`norm::holder_norm`]).
//!
//! All algebra is exact over arbitrary-precision rationals; floating
//! point appears only in the norm module. The crate is `no_std`
//! (requires `alloc`).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod alt;
pub mod error;
pub mod linalg;
pub mod multiindex;
pub mod multilinear;
pub mod norm;
pub mod polymap;
pub mod rational;
pub mod shuffle;
pub mod sym;

pub use alt::AltMatrix;
pub use error::{Error, Result};
pub use linalg::DenseMatrix;
pub use multiindex::{MultiIndex, StrictIndex};
pub use multilinear::{AltMultiMap, BilinearMap, SymMultiMap, Tensor};
pub use norm::NormParams;
pub use polymap::{BlockMatrix, PolyMap};
pub use rational::Rational;
pub use shuffle::Permutation;
pub use sym::SymMatrix;
