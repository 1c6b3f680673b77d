//! Annuli of `|a|` values excluded by trial vectors for `z^n|z|^s + a·z^m|z|^t`.
//!
//! For a fixed nonnegative `u`, `Q_u(r) = r²ω̂ − 2rδ̂ + σ̂` lower-bounds the form over
//! all phases, and it is attained, so `Q_u(|a|) < 0` refutes hyponormality.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::interval::{Interval, IntervalUnion};
use super::quotient::{indicator_block, linear_block};
use crate::commutator::{trial_sums, weight_sequences, TrialSums, WeightFamily, WeightSequences};
use crate::error::{Error, Result};
use crate::linalg::HermitianBand;
use crate::par;
use crate::scalar::Scalar;

/// Relative inward shrink applied to float roots before certification.
const SHRINK: f64 = 1e-6;
/// `Q` must be below `−MARGIN·magnitude` at both shrunken endpoints.
const MARGIN: f64 = 1e-9;

fn check_order(m: u64, n: u64) -> Result<()> {
    if m == 0 || m >= n {
        return Err(Error::Precondition(format!(
            "need 0 < m < n, got m = {m}, n = {n}"
        )));
    }
    Ok(())
}

/// The open interval between the roots of `Q_u`, or `None` when `u` places no constraint.
pub fn annulus_for_trial<T: Scalar>(
    m: u64,
    n: u64,
    s: T,
    t: T,
    u: &[T],
) -> Result<Option<Interval>> {
    check_order(m, n)?;
    if u.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroVector);
    }
    let sums = trial_sums(&weight_sequences(m, n, s, t), WeightFamily::Additive, u)?;
    Ok(sums
        .roots_f64()
        .and_then(|(lo, hi)| Interval::new(lo.max(0.0), hi)))
}

/// Shrinks float roots until `Q` is certifiably negative at both ends; convexity then covers the interior.
fn certified_annulus(sums: &TrialSums<f64>) -> Option<Interval> {
    let (lo, hi) = sums.roots_f64()?;
    let lo = lo.max(0.0);
    let pad = SHRINK * (hi - lo).max(SHRINK * hi.abs());
    let (lo, hi) = (lo + pad, hi - pad);
    let negative = |r: f64| sums.value(&r) < -MARGIN * sums.magnitude(r);
    (lo < hi && negative(lo) && negative(hi))
        .then(|| Interval::new(lo, hi))
        .flatten()
}

/// One certified annulus with the trial that produced it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialAnnulus {
    pub trial: String,
    pub interval: Interval,
    #[serde(skip)]
    pub vector: Vec<f64>,
}

impl TrialAnnulus {
    /// `Q_u(r)` at the generating vector.
    pub fn replay(&self, m: u64, n: u64, s: f64, t: f64, r: f64) -> Result<f64> {
        let sums = trial_sums(
            &weight_sequences(m, n, s, t),
            WeightFamily::Additive,
            &self.vector,
        )?;
        Ok(sums.value(&r))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExcludedRegion {
    pub annuli: Vec<TrialAnnulus>,
    pub union: IntervalUnion,
}

impl ExcludedRegion {
    /// The annulus with an interval containing `r`, if any.
    pub fn witness_for(&self, r: f64) -> Option<&TrialAnnulus> {
        self.annuli.iter().find(|a| a.interval.contains(r))
    }
}

/// Minimal eigenvectors of the scaled band matrix of `r²Ω − 2rΔ + Σ`.
fn extremizer(w: &WeightSequences<f64>, size: usize, r: f64) -> Option<Vec<f64>> {
    let d = (w.n - w.m) as usize;
    let scale: Vec<f64> = (0..size).map(|k| ((k + 1) as f64).powf(1.5)).collect();
    let mut band = HermitianBand::zeros(size, d);
    for k in 0..size {
        let diag = r * r * w.omega(k as u64) + w.sigma(k as u64);
        band.set(k, k, Complex64::new(diag * scale[k] * scale[k], 0.0));
        if k + d < size {
            let off = -r * w.delta(k as u64) * scale[k] * scale[k + d];
            band.set(k, k + d, Complex64::new(off, 0.0));
        }
    }
    let (lambda, x) = band.min_eigenpair().ok()?;
    if !(lambda < 0.0) {
        return None;
    }
    Some(
        x.iter()
            .zip(&scale)
            .map(|(xi, sk)| xi.norm() * sk)
            .collect(),
    )
}

/// The deterministic trial family, in a fixed order.
fn trials(m: u64, n: u64, s: f64, t: f64, budget: usize) -> Vec<(String, Vec<f64>)> {
    let d = (n - m) as usize;
    let mut out = Vec::new();
    for k in 0..budget.min(64) {
        for w in [0.25, 0.5, 1.0, 2.0, 4.0] {
            let mut u = vec![0.0; k + d + 1];
            u[k] = 1.0;
            u[k + d] = w;
            out.push((format!("pair:k={k}:w={w}"), u));
        }
    }
    let mut len = d.max(1);
    while len <= budget {
        out.push((format!("indicator:0..={len}"), indicator_block(0, len)));
        len *= 2;
    }
    let mut x = 2usize;
    let mut scales = Vec::new();
    while x < budget {
        scales.push(x);
        x *= 2;
    }
    scales.push(budget.max(2));
    for x in scales {
        out.push((format!("linear:{x}..={}", x * x), linear_block(x, x * x)));
    }
    let w = weight_sequences(m, n, s, t);
    let size = budget.clamp(d + 1, 400) + 1;
    let grid: Vec<f64> = (0..48).map(|i| 0.05 * 1.2f64.powi(i)).collect();
    let found: Vec<Option<Vec<f64>>> = par::map(grid.clone(), |r| extremizer(&w, size, r));
    for (r, u) in grid.into_iter().zip(found) {
        if let Some(u) = u {
            out.push((format!("extremizer:r={r:.6}:N={}", size - 1), u));
        }
    }
    out
}

/// Union of certified annuli over the trial family. Every point is a certified
/// non-hyponormal `|a|`, replayable through [`TrialAnnulus::replay`].
pub fn excluded_region(m: u64, n: u64, s: f64, t: f64, budget: usize) -> Result<ExcludedRegion> {
    check_order(m, n)?;
    if budget == 0 {
        return Err(Error::Precondition("budget must be positive".into()));
    }
    let w = weight_sequences(m, n, s, t);
    let evaluated: Vec<Option<TrialAnnulus>> =
        par::map(trials(m, n, s, t, budget), |(trial, vector)| {
            let sums = trial_sums(&w, WeightFamily::Additive, &vector).ok()?;
            certified_annulus(&sums).map(|interval| TrialAnnulus {
                trial,
                interval,
                vector,
            })
        });
    let annuli: Vec<TrialAnnulus> = evaluated.into_iter().flatten().collect();
    let union = IntervalUnion::from_intervals(annuli.iter().map(|a| a.interval));
    Ok(ExcludedRegion { annuli, union })
}

/// `((2mn+ms+nt ∓ |ms−nt|) / (2m(m+t)))`, the large-scale limit of block-vector annuli.
pub fn asymptotic_interval<T: Scalar>(m: u64, n: u64, s: T, t: T) -> Result<Option<(T, T)>> {
    check_order(m, n)?;
    let (mt, nt) = (T::from_u64(m), T::from_u64(n));
    let ms = mt.clone() * s.clone();
    let ntt = nt.clone() * t.clone();
    if ms == ntt {
        return Ok(None);
    }
    let gap = (ms.clone() - ntt.clone()).abs();
    let centre = T::from_int(2) * mt.clone() * nt + ms + ntt;
    let den = T::from_int(2) * mt.clone() * (mt + t);
    Ok(Some((
        (centre.clone() - gap.clone()) / den.clone(),
        (centre + gap) / den,
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use proptest::prelude::*;

    #[test]
    fn asymptotic_interval_examples() {
        let q = Rational::from_int;
        assert_eq!(
            asymptotic_interval(1, 2, q(1), q(0)).unwrap(),
            Some((q(2), q(3)))
        );
        assert_eq!(
            asymptotic_interval(1, 3, q(2), q(0)).unwrap(),
            Some((q(3), q(5)))
        );
        assert_eq!(asymptotic_interval(1, 2, q(2), q(1)).unwrap(), None);
        assert!(asymptotic_interval(2, 2, q(1), q(1)).is_err());
    }

    #[test]
    fn two_point_trial_matches_closed_form() {
        let (m, n, s, t) = (1u64, 3u64, 2.0, 0.5);
        let d = (n - m) as usize;
        let mut u = vec![0.0; d + 1];
        u[0] = 1.0;
        u[d] = 1.0;
        let w = weight_sequences(m, n, s, t);
        let (om, de, si) = (
            w.omega(0) + w.omega(d as u64),
            w.delta(0),
            w.sigma(0) + w.sigma(d as u64),
        );
        let disc = de * de - om * si;
        let got = annulus_for_trial(m, n, s, t, &u).unwrap();
        if disc > 0.0 {
            let iv = got.unwrap();
            assert!((iv.lo - (de - disc.sqrt()) / om).abs() < 1e-12);
            assert!((iv.hi - (de + disc.sqrt()) / om).abs() < 1e-12);
        } else {
            assert!(got.is_none());
        }
    }

    #[test]
    fn single_unit_vector_places_no_constraint() {
        assert_eq!(annulus_for_trial(1, 2, 1.0, 0.0, &[1.0]).unwrap(), None);
    }

    #[test]
    fn block_annuli_approach_the_limit_interval() {
        let u: Vec<f64> = linear_block(200, 200 * 200);
        let iv = annulus_for_trial(1, 2, 1.0, 0.0, &u).unwrap().unwrap();
        assert!(
            (iv.lo - 2.0).abs() < 0.04 && (iv.hi - 3.0).abs() < 0.06,
            "{iv:?}"
        );
        let u: Vec<f64> = linear_block(50, 2500);
        let wide = annulus_for_trial(1, 2, 1.0, 0.0, &u).unwrap().unwrap();
        assert!(wide.lo > 1.9 && wide.hi < 3.1);
    }

    #[test]
    fn region_contains_interior_of_limit_interval() {
        let region = excluded_region(1, 2, 1.0, 0.0, 200).unwrap();
        assert!(region.union.covers(2.1, 2.9), "{:?}", region.union);
    }

    #[test]
    fn equal_exponents_exclude_nothing() {
        // m = n is rejected outright; ms = nt leaves at most numerically empty annuli
        assert!(excluded_region(2, 2, 1.0, 1.0, 50).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(8))]
        #[test]
        fn excluded_points_replay_negative(seed in 0u64..1000) {
            let region = excluded_region(1, 2, 1.0, 0.0, 64).unwrap();
            prop_assume!(!region.annuli.is_empty());
            let a = &region.annuli[(seed as usize) % region.annuli.len()];
            let frac = ((seed * 7919) % 1000) as f64 / 1000.0;
            let r = a.interval.lo + frac * a.interval.width();
            prop_assert!(a.replay(1, 2, 1.0, 0.0, r).unwrap() < 0.0);
        }
    }
}
