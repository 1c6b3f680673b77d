//! Trial-vector thresholds for `z^n|z|^s + a·z̄^m|z|^t`.

use crate::classifier::{check_delta_prime_positive, DeltaPrimeSign};
use crate::commutator::{trial_sums, weight_sequences, WeightFamily};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The smaller root `σ̂′/(δ̂′ + √(δ̂′² − ω̂′σ̂′))` of `r²ω̂′ − 2rδ̂′ + σ̂′`; the operator is
/// hyponormal iff `|a|` is at most the infimum of this over all `u`.
///
/// Requires `δ′_k > 0` on the support range, or `δ′ ≡ 0`.
pub fn conjugate_bound_for_trial<T: Scalar>(m: u64, n: u64, s: T, t: T, u: &[T]) -> Result<f64> {
    if m == 0 || n == 0 {
        return Err(Error::Precondition("m and n must be positive".into()));
    }
    if u.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroVector);
    }
    match check_delta_prime_positive(m, n, s.clone(), t.clone()) {
        DeltaPrimeSign::FailsAt(k) if (k as usize) < u.len() => {
            return Err(Error::HypothesisFailure(format!(
                "the cross weight is not positive at k = {k}"
            )));
        }
        _ => {}
    }
    let sums = trial_sums(&weight_sequences(m, n, s, t), WeightFamily::Conjugate, u)?;
    let (om, de, si) = (
        sums.omega.to_f64(),
        sums.delta.to_f64(),
        sums.sigma.to_f64(),
    );
    let disc = de * de - om * si;
    Ok(si / (de + disc.sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::linear_block;
    use crate::scalar::Rational;

    #[test]
    fn mirror_pair_gives_one() {
        for u in [vec![1.0], vec![0.0, 2.0, 5.0], linear_block(3, 40)] {
            let b = conjugate_bound_for_trial(2, 2, 3.0, 3.0, &u).unwrap();
            assert!((b - 1.0).abs() < 1e-12, "{b}");
        }
    }

    #[test]
    fn failing_hypothesis_is_reported() {
        // m = 1, n = 1, s = 2, t = 0: the cross weight starts negative
        let u = [
            Rational::from_int(1),
            Rational::from_int(1),
            Rational::from_int(1),
        ];
        assert!(matches!(
            conjugate_bound_for_trial(1, 1, Rational::from_int(2), Rational::from_int(0), &u),
            Err(Error::HypothesisFailure(_))
        ));
    }

    #[test]
    fn large_blocks_keep_the_bound_finite() {
        // δ′ > 0 here; bounds from growing blocks stay bounded
        let (m, n, s, t) = (1u64, 2u64, 0.0, 3.0);
        let mut prev = f64::INFINITY;
        for x in [4usize, 16, 64] {
            let b = conjugate_bound_for_trial(m, n, s, t, &linear_block::<f64>(x, x * x)).unwrap();
            assert!(b.is_finite() && b > 0.0);
            prev = prev.min(b);
        }
        assert!(prev < 50.0);
    }
}
