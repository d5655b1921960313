//! The Hölder-style norm on the antisymmetric matrix family.
//!
//! This is the crate's only floating-point surface: entries are
//! converted exactly-rounded to binary64 and combined as
//! `( sum |a|^rho / (p! p'!)^(rho-1) )^(1/rho)`. The norm is
//! submultiplicative under the wedge product.

use crate::alt::AltMatrix;
use crate::error::{Error, Result};
use crate::rational::factorial_big;

/// Validated norm exponent `rho >= 1`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct NormParams {
    rho: f64,
}

impl NormParams {
    pub fn new(rho: f64) -> Result<Self> {
        // Comparing this way also rejects NaN.
        if rho >= 1.0 {
            Ok(NormParams { rho })
        } else {
            Err(Error::InvalidNormExponent)
        }
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }
}

/// The weighted entrywise Hölder norm of an antisymmetric matrix.
pub fn holder_norm(a: &AltMatrix, params: NormParams) -> Result<f64> {
    let rho = params.rho;
    let mut sum = 0.0f64;
    // rho = 1 collapses the divisor exponent to 0.
    let divisor = if rho == 1.0 {
        1.0
    } else {
        let weight = factorial_big(a.p()) * factorial_big(a.p_prime());
        let weight = crate::rational::Rational::from(weight).to_f64()?;
        libm::pow(weight, rho - 1.0)
    };
    for row in 0..a.flat_rows() {
        for col in 0..a.flat_cols() {
            let entry = a.entry_at_rank(row, col);
            if entry.is_zero() {
                continue;
            }
            let v = libm::fabs(entry.to_f64()?);
            sum += if rho == 1.0 {
                v
            } else {
                libm::pow(v, rho) / divisor
            };
        }
    }
    if rho == 1.0 {
        Ok(sum)
    } else {
        Ok(libm::pow(sum, 1.0 / rho))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::DenseMatrix;
    use crate::rational::Rational;

    #[test]
    fn exponent_validation() {
        assert!(NormParams::new(0.5).is_err());
        assert!(NormParams::new(f64::NAN).is_err());
        assert!(NormParams::new(1.0).is_ok());
    }

    #[test]
    fn zero_matrix_has_zero_norm() {
        let z = AltMatrix::zeros(3, 3, 2, 1);
        assert_eq!(holder_norm(&z, NormParams::new(2.0).unwrap()).unwrap(), 0.0);
    }

    #[test]
    fn all_ones_weight_one_norm() {
        // With p = p' = 1 the divisor is 1; the 2x2 all-ones matrix has
        // Euclidean-style norm sqrt(4) = 2.
        let ones = DenseMatrix::construct(2, 2, |_, _| Rational::one());
        let a = AltMatrix::from_dense(2, 2, 1, 1, &ones).unwrap();
        let v = holder_norm(&a, NormParams::new(2.0).unwrap()).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn rho_one_is_plain_absolute_sum() {
        let mut entries = vec![Rational::zero(); 9];
        entries[0] = Rational::from(3);
        entries[4] = Rational::from(-4);
        let m = DenseMatrix::from_entries(3, 3, entries).unwrap();
        let a = AltMatrix::from_dense(3, 3, 2, 2, &m).unwrap();
        let v = holder_norm(&a, NormParams::new(1.0).unwrap()).unwrap();
        assert!((v - 7.0).abs() < 1e-12);
    }

    #[test]
    fn divisor_uses_weight_factorials() {
        // A single unit entry in a (2, 1) stratum at rho = 2 gives
        // 1 / sqrt(2! 1!) = 1/sqrt(2).
        let m = DenseMatrix::from_entries(3, 3, {
            let mut v = vec![Rational::zero(); 9];
            v[0] = Rational::one();
            v
        })
        .unwrap();
        let a = AltMatrix::from_dense(3, 3, 2, 1, &m).unwrap();
        let v = holder_norm(&a, NormParams::new(2.0).unwrap()).unwrap();
        assert!((v - 1.0 / 2.0f64.sqrt()).abs() < 1e-12);
    }
}
