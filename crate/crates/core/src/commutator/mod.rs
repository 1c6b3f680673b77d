//! The self-commutator quadratic form `u ↦ ‖T_φ u‖² − ‖T_φ̄ u‖²` on the monomial basis.
//!
//! `T_φ e_k` is a finite combination of monomials, so every entry of the form
//! restricted to degrees `0..=N` is a finite sum and is computed exactly. Images
//! that land above degree `N` are included; only the test vectors are truncated.

mod certificate;
mod quadratic;
mod weights;

use num_complex::{Complex, Complex64};

pub use certificate::{min_eigen_certificate, round_to_gaussian, DEFAULT_SCHEDULE, DEFAULT_TOL};
pub(crate) use quadratic::check_nonnegative;
pub use quadratic::{
    conjugate_quadratic, trial_sums, worst_case_quadratic, TrialSums, WeightFamily,
};
pub use weights::{weight_sequences, WeightSequences};

use crate::error::{Error, Result};
use crate::linalg::HermitianBand;
use crate::projection::{monomial_norm_sq, toeplitz_apply};
use crate::scalar::{cx_real, cx_to_f64, tree_sum, Scalar};
use crate::symbol::RadialSymbol;

/// Hermitian band matrix `M` with `u*·M·u = ⟨[T_φ*, T_φ]u, u⟩` for `u` supported on `0..size`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedForm<T> {
    size: usize,
    bandwidth: usize,
    /// `upper[i * (bandwidth+1) + o] = M[i][i+o]`.
    upper: Vec<Complex<T>>,
}

impl<T: Scalar> TruncatedForm<T> {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bandwidth(&self) -> usize {
        self.bandwidth
    }

    /// `M[i][j]`.
    pub fn entry(&self, i: usize, j: usize) -> Complex<T> {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        let off = hi - lo;
        if hi >= self.size || off > self.bandwidth {
            return cx_real(T::zero());
        }
        let v = self.upper[lo * (self.bandwidth + 1) + off].clone();
        if i <= j {
            v
        } else {
            v.conj()
        }
    }

    /// `u*·M·u`; `u` may be shorter than the form.
    pub fn quadratic_value(&self, u: &[Complex<T>]) -> T {
        let n = u.len().min(self.size);
        let mut terms = Vec::with_capacity(n * (self.bandwidth + 1));
        for i in 0..n {
            for o in 0..=self.bandwidth {
                let j = i + o;
                if j >= n {
                    break;
                }
                let m = &self.upper[i * (self.bandwidth + 1) + o];
                let v = (u[i].conj() * m.clone() * u[j].clone()).re;
                terms.push(if o == 0 { v } else { v * T::from_int(2) });
            }
        }
        tree_sum(terms)
    }

    pub fn to_band(&self) -> HermitianBand {
        let mut band = HermitianBand::zeros(self.size, self.bandwidth);
        for i in 0..self.size {
            for o in 0..=self.bandwidth.min(self.size - 1 - i) {
                band.set(
                    i,
                    i + o,
                    cx_to_f64(&self.upper[i * (self.bandwidth + 1) + o]),
                );
            }
        }
        band
    }

    /// Smallest eigenvalue of the unscaled matrix, in floating point.
    pub fn min_eigenvalue(&self) -> f64 {
        self.to_band().min_eigenvalue()
    }

    pub fn is_zero(&self) -> bool {
        self.upper.iter().all(|v| v.re.is_zero() && v.im.is_zero())
    }
}

/// Sparse column `T_φ e_k` as (degree, coefficient) pairs.
fn column<T: Scalar>(phi: &RadialSymbol<T>, k: u64) -> Vec<(u64, Complex<T>)> {
    toeplitz_apply(phi, k)
        .into_iter()
        .map(|m| (m.degree, m.coeff))
        .collect()
}

/// `⟨T e_j, T e_i⟩` from the two sparse columns.
fn gram_entry<T: Scalar>(ci: &[(u64, Complex<T>)], cj: &[(u64, Complex<T>)]) -> Complex<T> {
    let mut acc = cx_real(T::zero());
    for (di, a) in ci {
        for (dj, b) in cj {
            if di == dj {
                acc = acc + a.conj() * b.clone() * cx_real(monomial_norm_sq::<T>(*di));
            }
        }
    }
    acc
}

/// Exact truncated commutator form on degrees `0..=n`.
pub fn commutator_form<T: Scalar>(phi: &RadialSymbol<T>, n: usize) -> Result<TruncatedForm<T>> {
    if !phi.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let size = n + 1;
    let bandwidth = (phi.max_shift_spread() as usize).min(n);
    let conj = phi.conjugate();
    let cols: Vec<_> = (0..size as u64).map(|k| column(phi, k)).collect();
    let conj_cols: Vec<_> = (0..size as u64).map(|k| column(&conj, k)).collect();
    let mut upper = Vec::with_capacity(size * (bandwidth + 1));
    for i in 0..size {
        for o in 0..=bandwidth {
            let j = i + o;
            if j >= size {
                upper.push(cx_real(T::zero()));
                continue;
            }
            let v = gram_entry(&cols[i], &cols[j]) - gram_entry(&conj_cols[i], &conj_cols[j]);
            upper.push(v);
        }
    }
    Ok(TruncatedForm {
        size,
        bandwidth,
        upper,
    })
}

/// `‖T_φ u‖²`, computed from the image coefficients.
pub fn image_norm_sq<T: Scalar>(phi: &RadialSymbol<T>, u: &[Complex<T>]) -> T {
    let top = u.len() as u64
        + phi
            .terms()
            .iter()
            .map(|m| u64::from(m.holo()))
            .max()
            .unwrap_or(0);
    let mut image = vec![cx_real(T::zero()); top as usize + 1];
    for (k, uk) in u.iter().enumerate() {
        if uk.re.is_zero() && uk.im.is_zero() {
            continue;
        }
        for (d, c) in column(phi, k as u64) {
            image[d as usize] = image[d as usize].clone() + c * uk.clone();
        }
    }
    tree_sum(
        image
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !(v.re.is_zero() && v.im.is_zero()))
            .map(|(d, v)| v.norm_sqr() * monomial_norm_sq::<T>(d as u64))
            .collect(),
    )
}

/// `⟨[T_φ*, T_φ]u, u⟩ = ‖T_φ u‖² − ‖T_φ̄ u‖²` evaluated directly from the images.
pub fn commutator_value<T: Scalar>(phi: &RadialSymbol<T>, u: &[Complex<T>]) -> T {
    let phi = phi.normalize();
    image_norm_sq(&phi, u) - image_norm_sq(&phi.conjugate(), u)
}

/// Same as [`commutator_value`] in double precision.
pub fn commutator_value_f64(phi: &RadialSymbol<f64>, u: &[Complex64]) -> f64 {
    commutator_value(phi, u)
}
