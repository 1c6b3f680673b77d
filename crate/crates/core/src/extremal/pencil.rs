//! The quotient's infimum over vectors of degree `≤ N` as a symmetric pencil.
//!
//! With `A` the diagonal numerator weights and `B` carrying half the coupling weights
//! on the `±n` diagonals, the infimum over the truncation is `1/λ_max(A^{-1/2} B A^{-1/2})`.
//! `B` is entrywise nonnegative, so the absolute value of an extremal eigenvector is
//! again extremal and the sign constraint costs nothing.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::quotient::{cinf_quotient, coupling_weight, numerator_weight, Quotient};
use crate::error::{Error, Result};
use crate::linalg::HermitianBand;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RatioSide {
    /// `value` is the quotient at `vector`, hence an upper bound for the infimum.
    UpperBound,
    /// `value` is the floating eigenvalue estimate only.
    PencilEstimate,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RatioEstimate<T> {
    pub value: T,
    pub vector: Vec<T>,
    pub truncation: usize,
    pub side: RatioSide,
    /// `1/λ_max` in double precision.
    pub eigen_estimate: f64,
}

/// Scales `x ≥ 0` so its maximum is `2^bits` and rounds to integers.
fn round_nonnegative<T: Scalar>(x: &[f64], bits: i32) -> Vec<T> {
    let max = x.iter().cloned().fold(0.0, f64::max);
    let scale = 2f64.powi(bits) / max;
    x.iter()
        .map(|v| T::from_f64((v * scale).round()).unwrap_or_else(T::zero))
        .collect()
}

pub fn pencil_infimum<T: Scalar>(n: u64, s: &T, truncation: usize) -> Result<RatioEstimate<T>> {
    if n == 0 || !s.is_positive() {
        return Err(Error::Precondition("n and s must be positive".into()));
    }
    if (truncation as u64) < n {
        return Err(Error::Precondition(format!(
            "truncation {truncation} is below n = {n}"
        )));
    }
    let size = truncation + 1;
    let nu = n as usize;
    let sf = s.to_f64();
    let a: Vec<f64> = (0..size)
        .map(|k| numerator_weight::<f64>(n, k as u64))
        .collect();
    let mut band = HermitianBand::zeros(size, nu);
    for k in 0..size - nu {
        let c = coupling_weight::<f64>(n, &sf, k as u64);
        band.set(
            k,
            k + nu,
            Complex64::new(0.5 * c / (a[k] * a[k + nu]).sqrt(), 0.0),
        );
    }
    let (lambda, x) = band.max_eigenpair()?;
    if !(lambda > 0.0) {
        return Err(Error::Eigen(format!(
            "largest pencil eigenvalue {lambda} is not positive"
        )));
    }
    let u: Vec<f64> = x
        .iter()
        .zip(&a)
        .map(|(xi, ai)| xi.norm() / ai.sqrt())
        .collect();
    let eigen_estimate = 1.0 / lambda;
    let vector: Vec<T> = round_nonnegative(&u, 40);
    if let Ok(Quotient::Finite(value)) = cinf_quotient(n, s, &vector) {
        return Ok(RatioEstimate {
            value,
            vector,
            truncation,
            side: RatioSide::UpperBound,
            eigen_estimate,
        });
    }
    let value =
        T::from_f64(eigen_estimate).ok_or_else(|| Error::Eigen("non-finite estimate".into()))?;
    Ok(RatioEstimate {
        value,
        vector: u
            .iter()
            .map(|v| T::from_f64(*v).unwrap_or_else(T::zero))
            .collect(),
        truncation,
        side: RatioSide::PencilEstimate,
        eigen_estimate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::quotient::indicator_block;
    use crate::scalar::Rational;
    use nalgebra::DMatrix;

    #[test]
    fn matches_dense_generalized_eigenproblem() {
        for (n, s, size) in [(1u64, 2.0, 30usize), (2, 4.0, 25), (3, 1.0, 20)] {
            let nu = n as usize;
            let a = DMatrix::from_fn(size, size, |i, j| {
                if i == j {
                    numerator_weight::<f64>(n, i as u64)
                } else {
                    0.0
                }
            });
            let b = DMatrix::from_fn(size, size, |i, j| {
                if j == i + nu {
                    0.5 * coupling_weight::<f64>(n, &s, i as u64)
                } else if i == j + nu {
                    0.5 * coupling_weight::<f64>(n, &s, j as u64)
                } else {
                    0.0
                }
            });
            let a_inv_sqrt = a.map(|v| if v > 0.0 { 1.0 / v.sqrt() } else { 0.0 });
            let c = &a_inv_sqrt * b * &a_inv_sqrt;
            let lmax = c.symmetric_eigenvalues().max();
            let est = pencil_infimum(n, &s, size - 1).unwrap();
            assert!((est.eigen_estimate - 1.0 / lmax).abs() < 1e-9 * est.eigen_estimate);
            assert!((est.value - est.eigen_estimate).abs() < 1e-8 * est.value);
        }
    }

    #[test]
    fn value_is_reproduced_by_its_vector() {
        let est = pencil_infimum(1, &Rational::from_int(2), 64).unwrap();
        assert_eq!(est.side, RatioSide::UpperBound);
        assert_eq!(
            cinf_quotient(1, &Rational::from_int(2), &est.vector).unwrap(),
            Quotient::Finite(est.value)
        );
    }

    #[test]
    fn beats_the_constant_block_for_n7() {
        let est = pencil_infimum(7, &1.0, 21).unwrap();
        let block = cinf_quotient(7, &1.0, &indicator_block::<f64>(0, 20)).unwrap();
        assert!(est.value <= block.to_f64() + 1e-12);
    }

    #[test]
    fn rejects_short_truncation() {
        assert!(pencil_infimum(5, &1.0, 3).is_err());
    }
}
