//! Worst-case-phase quadratic `Q_u(r) = r²·ω̂ − 2r·δ̂ + σ̂` of the two-term families.

use serde::{Deserialize, Serialize};

use super::weights::WeightSequences;
use crate::error::{Error, Result};
use crate::scalar::{tree_sum, Scalar};

/// Which pair of weight sequences a trial vector is summed against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightFamily {
    /// `z^n|z|^s + a·z^m|z|^t`, coupling offset `n − m`.
    Additive,
    /// `z^n|z|^s + a·z̄^m|z|^t`, coupling offset `n + m`.
    Conjugate,
}

/// The three hatted sums of a trial vector.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialSums<T> {
    pub omega: T,
    pub delta: T,
    pub sigma: T,
}

impl<T: Scalar> TrialSums<T> {
    /// `r²·ω̂ − 2r·δ̂ + σ̂`.
    pub fn value(&self, r: &T) -> T {
        r.clone() * r.clone() * self.omega.clone() - T::from_int(2) * r.clone() * self.delta.clone()
            + self.sigma.clone()
    }

    /// `δ̂² − ω̂·σ̂`.
    pub fn discriminant(&self) -> T {
        self.delta.clone() * self.delta.clone() - self.omega.clone() * self.sigma.clone()
    }

    /// Real roots `(δ̂ ∓ √disc)/ω̂` in increasing order, when the discriminant is positive.
    pub fn roots_f64(&self) -> Option<(f64, f64)> {
        let disc = self.discriminant();
        if !disc.is_positive() || self.omega.is_zero() {
            return None;
        }
        let (om, de) = (self.omega.to_f64(), self.delta.to_f64());
        let sq = disc.to_f64().sqrt();
        let (a, b) = ((de - sq) / om, (de + sq) / om);
        Some(if a <= b { (a, b) } else { (b, a) })
    }

    /// Absolute scale of the three contributions at `r`, used for float margins.
    pub fn magnitude(&self, r: f64) -> f64 {
        r * r * self.omega.to_f64().abs()
            + 2.0 * r * self.delta.to_f64().abs()
            + self.sigma.to_f64().abs()
    }
}

pub(crate) fn check_nonnegative<T: Scalar>(u: &[T]) -> Result<()> {
    match u.iter().position(|x| x.is_negative()) {
        Some(i) => Err(Error::NegativeEntry(i)),
        None => Ok(()),
    }
}

/// Hatted sums of `u` against the given family's weights.
pub fn trial_sums<T: Scalar>(
    w: &WeightSequences<T>,
    family: WeightFamily,
    u: &[T],
) -> Result<TrialSums<T>> {
    check_nonnegative(u)?;
    let offset = match family {
        WeightFamily::Additive => {
            w.n.checked_sub(w.m)
                .ok_or_else(|| Error::Precondition("the additive family needs m ≤ n".into()))?
        }
        WeightFamily::Conjugate => w.n + w.m,
    } as usize;
    let support: Vec<usize> = (0..u.len()).filter(|&k| !u[k].is_zero()).collect();
    let sq = |k: usize| u[k].clone() * u[k].clone();
    let (omega, sigma, delta) = match family {
        WeightFamily::Additive => (
            tree_sum(support.iter().map(|&k| w.omega(k as u64) * sq(k)).collect()),
            tree_sum(support.iter().map(|&k| w.sigma(k as u64) * sq(k)).collect()),
            tree_sum(
                support
                    .iter()
                    .filter(|&&k| k + offset < u.len())
                    .map(|&k| w.delta(k as u64) * u[k].clone() * u[k + offset].clone())
                    .collect(),
            ),
        ),
        WeightFamily::Conjugate => (
            tree_sum(
                support
                    .iter()
                    .map(|&k| w.omega_prime(k as u64) * sq(k))
                    .collect(),
            ),
            tree_sum(
                support
                    .iter()
                    .map(|&k| w.sigma_prime(k as u64) * sq(k))
                    .collect(),
            ),
            tree_sum(
                support
                    .iter()
                    .filter(|&&k| k + offset < u.len())
                    .map(|&k| w.delta_prime(k as u64).abs() * u[k].clone() * u[k + offset].clone())
                    .collect(),
            ),
        ),
    };
    Ok(TrialSums {
        omega,
        delta,
        sigma,
    })
}

/// `Q_u(r)` for `z^n|z|^s + a·z^m|z|^t` with `|a| = r`: the minimum of the commutator
/// form over all phase choices of a vector with moduli `u`.
pub fn worst_case_quadratic<T: Scalar>(m: u64, n: u64, s: T, t: T, u: &[T], r: &T) -> Result<T> {
    let w = WeightSequences { m, n, s, t };
    Ok(trial_sums(&w, WeightFamily::Additive, u)?.value(r))
}

/// The analogue of [`worst_case_quadratic`] for `z^n|z|^s + a·z̄^m|z|^t`.
pub fn conjugate_quadratic<T: Scalar>(m: u64, n: u64, s: T, t: T, u: &[T], r: &T) -> Result<T> {
    let w = WeightSequences { m, n, s, t };
    Ok(trial_sums(&w, WeightFamily::Conjugate, u)?.value(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commutator::{commutator_form, commutator_value};
    use crate::scalar::{cx, cx_real, Rational};
    use crate::symbol::{Monomial, RadialSymbol};
    use num_traits::Signed;
    use proptest::prelude::*;

    type Q = Rational;

    fn additive(m: u32, n: u32, s: Q, t: Q, a: Q) -> RadialSymbol<Q> {
        RadialSymbol::new(vec![
            Monomial::new(cx_real(Q::from_int(1)), n, 0, s).unwrap(),
            Monomial::new(cx_real(a), m, 0, t).unwrap(),
        ])
        .normalize()
    }

    fn conjugate(m: u32, n: u32, s: Q, t: Q, a: Q) -> RadialSymbol<Q> {
        RadialSymbol::new(vec![
            Monomial::new(cx_real(Q::from_int(1)), n, 0, s).unwrap(),
            Monomial::new(cx_real(a), 0, m, t).unwrap(),
        ])
        .normalize()
    }

    #[test]
    fn unit_vector_gives_sigma_zero() {
        let u = [Q::from_int(1)];
        let v = worst_case_quadratic(1, 2, Q::from_int(1), Q::from_int(0), &u, &Q::from_int(0))
            .unwrap();
        let w = WeightSequences {
            m: 1,
            n: 2,
            s: Q::from_int(1),
            t: Q::from_int(0),
        };
        assert_eq!(v, w.sigma(0));
    }

    #[test]
    fn rejects_negative_entries() {
        let u = [Q::from_int(1), Q::from_int(-1)];
        assert_eq!(
            worst_case_quadratic(1, 2, Q::from_int(1), Q::from_int(0), &u, &Q::from_int(1)),
            Err(Error::NegativeEntry(1))
        );
    }

    #[test]
    fn two_point_vector_roots() {
        let w = WeightSequences {
            m: 1,
            n: 2,
            s: Q::from_int(1),
            t: Q::from_int(0),
        };
        let u = [Q::from_int(1), Q::from_int(1)];
        let sums = trial_sums(&w, WeightFamily::Additive, &u).unwrap();
        assert_eq!(sums.delta, w.delta(0));
        match sums.roots_f64() {
            Some((lo, hi)) => {
                assert!(lo < hi);
                let mid = Q::from_f64(0.5 * (lo + hi)).unwrap();
                assert!(sums.value(&mid).is_negative());
            }
            None => assert!(!sums.discriminant().is_positive()),
        }
    }

    proptest! {
        #[test]
        fn additive_quadratic_equals_assembled_form(
            m in 1u32..3,
            gap in 1u32..3,
            s_num in 0i64..8,
            t_num in 0i64..8,
            r_num in 1i64..40,
            u in proptest::collection::vec(0i64..30, 1..20),
        ) {
            let n = m + gap;
            let (s, t, r) = (Q::ratio(s_num, 2), Q::ratio(t_num, 3), Q::ratio(r_num, 10));
            let phi = additive(m, n, s.clone(), t.clone(), -r.clone());
            let uq: Vec<Q> = u.iter().map(|&x| Q::from_int(x)).collect();
            let uc: Vec<_> = uq.iter().map(|x| cx_real(x.clone())).collect();
            let form = commutator_form(&phi, uq.len() - 1).unwrap();
            let q = worst_case_quadratic(u64::from(m), u64::from(n), s, t, &uq, &r).unwrap();
            prop_assert_eq!(form.quadratic_value(&uc), q.clone());
            prop_assert_eq!(commutator_value(&phi, &uc), q);
        }

        #[test]
        fn conjugate_quadratic_equals_assembled_form(
            m in 1u32..3,
            n in 1u32..4,
            s_num in 0i64..8,
            r_num in 1i64..40,
            u in proptest::collection::vec(0i64..30, 1..20),
        ) {
            // t chosen so that δ′ ≥ 0 everywhere: nt ≥ ms with room for the intercept
            let s = Q::ratio(s_num, 2);
            let t = s.clone() * Q::from_int(i64::from(m)) + Q::from_int(2);
            let w = WeightSequences { m: u64::from(m), n: u64::from(n), s: s.clone(), t: t.clone() };
            prop_assume!((0..40).all(|k| !w.delta_prime(k).is_negative()));
            let r = Q::ratio(r_num, 10);
            let phi = conjugate(m, n, s.clone(), t.clone(), -r.clone());
            let uq: Vec<Q> = u.iter().map(|&x| Q::from_int(x)).collect();
            let uc: Vec<_> = uq.iter().map(|x| cx_real(x.clone())).collect();
            let q = conjugate_quadratic(u64::from(m), u64::from(n), s, t, &uq, &r).unwrap();
            prop_assert_eq!(commutator_value(&phi, &uc), q);
        }
    }

    #[test]
    fn phase_aligned_complex_vector_attains_the_minimum() {
        // a = (3/5 + 4/5 i)·r, unit = −ā/|a|; u_k = x_k · unit^{⌊k/d⌋}
        let (m, n) = (1u32, 3u32);
        let d = (n - m) as usize;
        let (s, t) = (Q::from_int(1), Q::ratio(1, 2));
        let r = Q::from_int(2);
        let dir = cx(Q::ratio(3, 5), Q::ratio(4, 5));
        let a = dir.clone() * cx_real(r.clone());
        let phi = RadialSymbol::new(vec![
            Monomial::new(cx_real(Q::from_int(1)), n, 0, s.clone()).unwrap(),
            Monomial::new(a, m, 0, t.clone()).unwrap(),
        ])
        .normalize();
        let unit = -dir.conj();
        let x: Vec<Q> = (0..12).map(|k| Q::from_int(k + 1)).collect();
        let mut u = Vec::new();
        for (k, xk) in x.iter().enumerate() {
            let mut p = cx_real(Q::from_int(1));
            for _ in 0..k / d {
                p *= unit.clone();
            }
            u.push(p * cx_real(xk.clone()));
        }
        let q = worst_case_quadratic(u64::from(m), u64::from(n), s, t, &x, &r).unwrap();
        assert_eq!(commutator_value(&phi, &u), q);
    }
}
