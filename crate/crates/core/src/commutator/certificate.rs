//! Search for vectors with negative commutator form over a schedule of truncations.
//!
//! The form decays like `k⁻³` along the diagonal for the symbols of interest, so the
//! eigenproblem is solved for `W·M·W` with `W = diag((k+1)^{3/2})`, a congruence that
//! preserves inertia. Candidate vectors are rounded to Gaussian integers and replayed
//! exactly before they count.

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_traits::{FromPrimitive, Signed, Zero};

use super::{commutator_form, commutator_value};
use crate::scalar::{format_float, Rational, Scalar};
use crate::symbol::RadialSymbol;
use crate::verdict::{Source, Verdict, Witness};

pub const DEFAULT_SCHEDULE: [usize; 8] = [32, 64, 128, 256, 512, 1024, 2048, 4096];
pub const DEFAULT_TOL: f64 = 1e-12;

/// Truncations evaluated concurrently per round.
const WAVE: usize = 4;

/// Rounds `u / max|u_k| · 2^bits` entrywise to Gaussian integers.
pub fn round_to_gaussian(u: &[Complex64], bits: i32) -> Vec<Complex<Rational>> {
    let max = u.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if max == 0.0 || !max.is_finite() {
        return vec![Complex::new(Rational::from_int(0), Rational::from_int(0)); u.len()];
    }
    let scale = 2f64.powi(bits) / max;
    let int =
        |x: f64| Rational::from_integer(BigInt::from_f64((x * scale).round()).unwrap_or_default());
    u.iter()
        .map(|z| Complex::new(int(z.re), int(z.im)))
        .collect()
}

struct Attempt {
    truncation: usize,
    scaled_min: f64,
    witness: Option<Witness>,
}

fn attempt<T: Scalar>(
    phi: &RadialSymbol<T>,
    exact: &RadialSymbol<Rational>,
    n: usize,
    tol: f64,
) -> Attempt {
    let fail = |scaled_min| Attempt {
        truncation: n,
        scaled_min,
        witness: None,
    };
    let Ok(form) = commutator_form(phi, n) else {
        return fail(f64::NAN);
    };
    let weights: Vec<f64> = (0..=n).map(|k| ((k + 1) as f64).powf(1.5)).collect();
    let scaled = form.to_band().scaled(&weights);
    let Ok((lambda, x)) = scaled.min_eigenpair() else {
        return fail(scaled.min_eigenvalue());
    };
    if lambda >= -tol {
        return fail(lambda);
    }
    let u: Vec<Complex64> = x.iter().zip(&weights).map(|(xi, w)| xi * w).collect();
    for bits in [40, 60] {
        let mut uq = round_to_gaussian(&u, bits);
        while uq.last().is_some_and(|z| z.re.is_zero() && z.im.is_zero()) {
            uq.pop();
        }
        let value = commutator_value(exact, &uq);
        if value.is_negative() {
            return Attempt {
                truncation: n,
                scaled_min: lambda,
                witness: Some(Witness::new(&uq, &value, n)),
            };
        }
    }
    fail(lambda)
}

/// `NotHyponormal` with an exactly replayed witness from the smallest truncation in
/// `schedule` that yields one; otherwise `Inconclusive` with the smallest scaled
/// eigenvalue seen. Never returns `Hyponormal`.
pub fn min_eigen_certificate<T: Scalar>(
    phi: &RadialSymbol<T>,
    schedule: &[usize],
    tol: f64,
) -> Verdict {
    let phi = phi.normalize();
    let exact = phi.to_rational();
    let mut sorted: Vec<usize> = schedule.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut smallest = f64::INFINITY;
    let mut smallest_at = 0;
    for wave in sorted.chunks(WAVE) {
        let results = crate::par::map(wave.to_vec(), |n| attempt(&phi, &exact, n, tol));
        for r in &results {
            if r.scaled_min < smallest {
                smallest = r.scaled_min;
                smallest_at = r.truncation;
            }
        }
        if let Some(hit) = results.into_iter().find(|r| r.witness.is_some()) {
            let witness = hit.witness.expect("checked above");
            return Verdict::not_hyponormal(
                Source::EigenCertificate,
                format!(
                    "vector of degree ≤ {} with negative commutator form {}",
                    hit.truncation, witness.value
                ),
            )
            .with_param("truncation", hit.truncation)
            .with_param("scaled_min_eigenvalue", format_float(hit.scaled_min))
            .with_witness(witness);
        }
    }
    let max_n = sorted.last().copied().unwrap_or(0);
    Verdict::inconclusive(
        Source::EigenCertificate,
        format!("no negative direction found up to degree {max_n}"),
    )
    .with_param("max_truncation", max_n)
    .with_param("smallest_scaled_eigenvalue", format_float(smallest))
    .with_param("smallest_at", smallest_at)
}
