//! The extremal quotient governing `z^n + C|z|^s` and its trial vectors.

use serde::{Deserialize, Serialize};

use crate::commutator::check_nonnegative;
use crate::error::{Error, Result};
use crate::scalar::{format_scalar, tree_sum, Scalar};

/// A value of the quotient; an empty coupling sum imposes no constraint.
#[derive(Clone, Debug, PartialEq)]
pub enum Quotient<T> {
    Finite(T),
    NoConstraint,
}

impl<T: Scalar> Quotient<T> {
    pub fn finite(&self) -> Option<&T> {
        match self {
            Quotient::Finite(v) => Some(v),
            Quotient::NoConstraint => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Quotient::Finite(v) => v.to_f64(),
            Quotient::NoConstraint => f64::INFINITY,
        }
    }
}

/// Exported form: a number or the literal `no-constraint`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuotientValue {
    Finite(String),
    NoConstraint,
}

impl<T: Scalar> From<&Quotient<T>> for QuotientValue {
    fn from(q: &Quotient<T>) -> Self {
        match q {
            Quotient::Finite(v) => QuotientValue::Finite(format_scalar(v)),
            Quotient::NoConstraint => QuotientValue::NoConstraint,
        }
    }
}

/// Diagonal weight of `u_k²` in the numerator.
pub(crate) fn numerator_weight<T: Scalar>(n: u64, k: u64) -> T {
    if k < n {
        T::one() / T::from_u64(k + n + 1)
    } else {
        T::from_u64(n * n) / (T::from_u64((k + 1) * (k + 1)) * T::from_u64(k + n + 1))
    }
}

/// Coefficient of `u_k·u_{k+n}` in the denominator.
pub(crate) fn coupling_weight<T: Scalar>(n: u64, s: &T, k: u64) -> T {
    let half = s.clone() / T::from_int(2);
    s.clone() * T::from_u64(n)
        / (T::from_u64(k + n + 1)
            * (T::from_u64(k + 1) + half.clone())
            * (T::from_u64(k + n + 1) + half))
}

/// Numerator and denominator sums of the quotient.
pub fn quotient_parts<T: Scalar>(n: u64, s: &T, u: &[T]) -> (T, T) {
    let num = tree_sum(
        u.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| numerator_weight::<T>(n, k as u64) * x.clone() * x.clone())
            .collect(),
    );
    let n_us = n as usize;
    let den = tree_sum(
        (0..u.len().saturating_sub(n_us))
            .filter(|&k| !u[k].is_zero() && !u[k + n_us].is_zero())
            .map(|k| coupling_weight(n, s, k as u64) * u[k].clone() * u[k + n_us].clone())
            .collect(),
    );
    (num, den)
}

/// `[Σ_{k<n} u_k²/(k+n+1) + Σ_{k≥n} n²u_k²/((k+1)²(k+n+1))] / [sn·Σ u_k u_{k+n}/((k+n+1)(k+1+s/2)(k+n+1+s/2))]`.
pub fn cinf_quotient<T: Scalar>(n: u64, s: &T, u: &[T]) -> Result<Quotient<T>> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if !s.is_positive() {
        return Err(Error::Precondition("s must be positive".into()));
    }
    check_nonnegative(u)?;
    if u.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroVector);
    }
    let (num, den) = quotient_parts(n, s, u);
    if den.is_zero() {
        return Ok(Quotient::NoConstraint);
    }
    Ok(Quotient::Finite(num / den))
}

/// `u_k = k + 1` on `[from, to]`, zero elsewhere.
pub fn linear_block<T: Scalar>(from: usize, to: usize) -> Vec<T> {
    (0..=to)
        .map(|k| {
            if k >= from {
                T::from_u64(k as u64 + 1)
            } else {
                T::zero()
            }
        })
        .collect()
}

/// `u_k = 1` on `[from, to]`, zero elsewhere.
pub fn indicator_block<T: Scalar>(from: usize, to: usize) -> Vec<T> {
    (0..=to)
        .map(|k| if k >= from { T::one() } else { T::zero() })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn single_low_vector_has_no_constraint() {
        let u = [Rational::from_int(1)];
        assert_eq!(
            cinf_quotient(1, &Rational::from_int(2), &u),
            Ok(Quotient::NoConstraint)
        );
    }

    #[test]
    fn rejects_zero_and_negative_vectors() {
        let zero = [0.0f64, 0.0];
        assert_eq!(cinf_quotient(1, &2.0, &zero), Err(Error::ZeroVector));
        assert_eq!(
            cinf_quotient(1, &2.0, &[1.0, -1.0]),
            Err(Error::NegativeEntry(1))
        );
    }

    #[test]
    fn exact_and_float_paths_agree() {
        let uq: Vec<Rational> = indicator_block(0, 20);
        let uf: Vec<f64> = indicator_block(0, 20);
        let exact = cinf_quotient(7, &Rational::from_int(1), &uq).unwrap();
        let float = cinf_quotient(7, &1.0, &uf).unwrap();
        assert!((exact.to_f64() - float.to_f64()).abs() < 1e-12);
    }

    #[test]
    fn written_out_instance_agrees_with_general_formula() {
        // n = 7, s = 1 written out: the k = 6 term 49/((k+1)²(k+8)) equals 1/(k+8)
        let u: Vec<Rational> = indicator_block(0, 20);
        let mut num = Rational::from_int(0);
        for k in 0..=5i64 {
            num += Rational::ratio(1, k + 8);
        }
        for k in 6..=20i64 {
            num += Rational::ratio(49, (k + 1) * (k + 1) * (k + 8));
        }
        let mut den = Rational::from_int(0);
        for k in 0..=13i64 {
            den += Rational::from_int(1)
                / (Rational::from_int(k + 8)
                    * Rational::ratio(2 * k + 17, 2)
                    * Rational::ratio(2 * k + 3, 2));
        }
        let expected = num / (den * Rational::from_int(7));
        assert_eq!(
            cinf_quotient(7, &Rational::from_int(1), &u).unwrap(),
            Quotient::Finite(expected)
        );
    }
}
