//! Sign of the conjugate-family cross weight `δ′_k`.

use serde::{Deserialize, Serialize};

use crate::commutator::weight_sequences;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeltaPrimeSign {
    /// `δ′_k > 0` for every `k ≥ 0`.
    Holds,
    /// `δ′_k = 0` for every `k`.
    IdenticallyZero,
    /// Least `k` with `δ′_k ≤ 0`.
    FailsAt(u64),
}

/// Exact for every `k`: `δ′_k` is a linear function of `k` over a positive denominator.
pub fn check_delta_prime_positive<T: Scalar>(m: u64, n: u64, s: T, t: T) -> DeltaPrimeSign {
    let (slope, constant) = weight_sequences(m, n, s, t).delta_prime_line();
    if slope.is_zero() && constant.is_zero() {
        return DeltaPrimeSign::IdenticallyZero;
    }
    if !constant.is_positive() {
        return DeltaPrimeSign::FailsAt(0);
    }
    if !slope.is_negative() {
        return DeltaPrimeSign::Holds;
    }
    // least integer k with slope·k + constant ≤ 0
    let root = (constant.clone() / -slope.clone()).to_f64();
    let mut k = root.ceil().max(0.0) as u64;
    let at = |k: u64| slope.clone() * T::from_u64(k) + constant.clone();
    while k > 0 && !at(k - 1).is_positive() {
        k -= 1;
    }
    while at(k).is_positive() {
        k += 1;
    }
    DeltaPrimeSign::FailsAt(k)
}
