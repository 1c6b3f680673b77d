//! Nonnegativity of a real polynomial on the integers `α ≥ m`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Alias used for the cleared-denominator polynomials of the algebraic family.
pub type RealPolynomial<T> = Poly<T>;

/// Relative margin below which a float evaluation is treated as undecided.
const FLOAT_MARGIN: f64 = 1e-9;
/// Longest integer scan attempted.
const MAX_SCAN: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RayPositivity {
    Nonnegative,
    /// Least integer `α ≥ m` with `p(α) < 0`.
    ViolatedAt(u64),
    /// A float evaluation fell within rounding margin of zero at this `α`.
    Uncertain(u64),
}

/// Every real root has modulus below this (minimum of the Cauchy and Fujiwara bounds, padded).
fn root_bound<T: Scalar>(p: &Poly<T>) -> Option<f64> {
    let deg = p.degree()?;
    if deg == 0 {
        return Some(0.0);
    }
    let cauchy = p.cauchy_bound()?.to_f64();
    let c = p.coeffs();
    let lead = c[deg].to_f64().abs();
    let fujiwara = 2.0
        * (1..=deg)
            .map(|i| {
                let ratio = c[deg - i].to_f64().abs() / lead;
                let ratio = if i == deg { ratio / 2.0 } else { ratio };
                ratio.powf(1.0 / i as f64)
            })
            .fold(0.0, f64::max);
    Some(cauchy.min(fujiwara) * (1.0 + 1e-6) + 1.0)
}

/// Decides `p(α) ≥ 0` for all integers `α ≥ m`: beyond the root bound the sign is that
/// of the leading coefficient, and the integers below it are evaluated one by one.
pub fn check_positivity_on_ray<T: Scalar>(p: &Poly<T>, m: u64) -> Result<RayPositivity> {
    let Some(bound) = root_bound(p) else {
        return Ok(RayPositivity::Nonnegative);
    };
    let last = m.max(bound.ceil() as u64);
    if last - m > MAX_SCAN {
        return Err(Error::Precondition(format!(
            "root bound {bound:e} needs too long a scan"
        )));
    }
    let abs_poly = Poly::new(p.coeffs().iter().map(|c| c.abs()).collect());
    let mut uncertain = None;
    for alpha in m..=last {
        let x = T::from_u64(alpha);
        let v = p.eval(&x);
        if !T::EXACT && v.to_f64().abs() <= FLOAT_MARGIN * abs_poly.eval(&x).to_f64() {
            uncertain.get_or_insert(alpha);
            continue;
        }
        if v.is_negative() {
            return Ok(RayPositivity::ViolatedAt(alpha));
        }
    }
    Ok(match uncertain {
        Some(alpha) => RayPositivity::Uncertain(alpha),
        None => RayPositivity::Nonnegative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::new(c.iter().map(|&v| Rational::from_int(v)).collect())
    }

    #[test]
    fn examples() {
        assert_eq!(
            check_positivity_on_ray(&p(&[1, 0, 1]), 1).unwrap(),
            RayPositivity::Nonnegative
        );
        // −(α−10)(α−20) = −α² + 30α − 200
        assert_eq!(
            check_positivity_on_ray(&p(&[-200, 30, -1]), 1).unwrap(),
            RayPositivity::ViolatedAt(1)
        );
        assert_eq!(
            check_positivity_on_ray(&p(&[-200, 30, -1]), 10).unwrap(),
            RayPositivity::ViolatedAt(21)
        );
        // (α−10)(α−11) has no integer strictly between its roots
        assert_eq!(
            check_positivity_on_ray(&p(&[110, -21, 1]), 1).unwrap(),
            RayPositivity::Nonnegative
        );
    }

    #[test]
    fn float_path_flags_near_zero_values() {
        let q = Poly::new(vec![110.0, -21.0, 1.0]);
        assert_eq!(
            check_positivity_on_ray(&q, 1).unwrap(),
            RayPositivity::Uncertain(10)
        );
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force(
            coeffs in proptest::collection::vec(-40i64..40, 1..7),
            roots in proptest::collection::vec(0i64..60, 0..3),
            m in 1u64..20,
        ) {
            // mix random polynomials with ones having roots in the scanned range
            let mut ints: Vec<i128> = coeffs.iter().map(|&c| i128::from(c)).collect();
            for r in roots {
                let mut next = vec![0i128; ints.len() + 1];
                for (i, c) in ints.iter().enumerate() {
                    next[i] -= c * i128::from(r);
                    next[i + 1] += c;
                }
                ints = next;
            }
            let poly = Poly::new(ints.iter().map(|&c| Rational::from_int(c as i64)).collect());
            prop_assume!(!poly.is_zero());
            let horner = |a: i128| ints.iter().rev().fold(0i128, |acc, c| acc * a + c);
            let brute = (m..=10_000).find(|&a| horner(i128::from(a)) < 0);
            let got = check_positivity_on_ray(&poly, m).unwrap();
            match brute {
                Some(a) => prop_assert_eq!(got, RayPositivity::ViolatedAt(a)),
                None => prop_assert_eq!(got, RayPositivity::Nonnegative),
            }
        }
    }
}
