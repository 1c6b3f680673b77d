//! Cauchy–Schwarz bounds giving `|a|` ranges where the two-term families are hyponormal.
//!
//! Each weight sequence `w_k` is compared with `1/(k+1)³`. The scaled sequence
//! `g(k) = (k+1)³·w_k` is a rational function of `k` past its piecewise threshold, so
//! beyond the Cauchy bound of its derivative numerator it is monotone and its extremes
//! are attained on a finite scan or in the limit.

use serde::{Deserialize, Serialize};

use crate::commutator::{weight_sequences, WeightSequences};
use crate::error::{Error, Result};
use crate::poly::{Poly, RationalFunction};
use crate::scalar::{Rational, Scalar};

/// Relative safety margin on float-scanned constants.
const MARGIN: f64 = 1e-9;
/// Refuse scans longer than this.
const MAX_SCAN: u64 = 5_000_000;

type R = Rational;

fn q(v: u64) -> R {
    R::from_u64(v)
}

/// `2k + c` as a polynomial in `k`.
fn lin(c: R) -> Poly<R> {
    Poly::linear(c, q(2))
}

fn cube_k1() -> Poly<R> {
    Poly::linear(q(1), q(1)).pow(3)
}

/// `(k+1)³ · diagonal weight` for `k ≥ p` with exponent `e`.
fn diagonal_tail(p: u64, e: &R) -> RationalFunction<R> {
    let a = lin(q(2) + e.clone());
    let b = lin(q(2 * p + 2) + e.clone());
    let pr = q(p);
    let num = a
        .scale(&(pr.clone() + e.clone()))
        .add(&Poly::constant(pr.clone() * (e.clone() + q(2 * p))))
        .scale(&q(8 * p));
    RationalFunction::new(num.mul(&cube_k1()), a.mul(&a).mul(&b).mul(&b))
}

fn delta_tail(w: &WeightSequences<R>) -> RationalFunction<R> {
    let (m, n, s, t) = (w.m, w.n, &w.s, &w.t);
    let p = lin(q(2 * n + 2) + s.clone());
    let qq = lin(q(2 * n + 2) + t.clone());
    let r = lin(q(2 * (n - m) + 2) + s.clone());
    let ww = lin(q(2) + t.clone());
    let slope = q(4 * m * n) + q(2 * m) * s.clone() + q(2 * n) * t.clone();
    let constant = q(4 * m * n * n + 4 * m * n)
        + q(2 * m * n) * s.clone()
        + q(m) * s.clone() * t.clone()
        + q(2 * m) * s.clone()
        + q(2 * n * n) * t.clone()
        + q(n) * s.clone() * t.clone()
        + q(2 * n) * t.clone();
    let num = Poly::linear(constant, slope).scale(&q(4));
    RationalFunction::new(num.mul(&cube_k1()), p.mul(&qq).mul(&r).mul(&ww))
}

fn delta_prime_tail(w: &WeightSequences<R>) -> RationalFunction<R> {
    let (m, n, s, t) = (w.m, w.n, &w.s, &w.t);
    let (slope, constant) = w.delta_prime_line();
    let a = lin(q(2 * n + 2) + s.clone());
    let b = lin(q(2 * (n + m) + 2) + t.clone());
    let c = lin(q(2 * (n + m) + 2) + s.clone());
    let d = lin(q(2 * m + 2) + t.clone());
    RationalFunction::new(
        Poly::linear(constant, slope).mul(&cube_k1()),
        a.mul(&b).mul(&c).mul(&d),
    )
}

/// `(inf, sup)` of `|g(k)|` over `k ≥ 0`, where `eval` gives `g` everywhere and `tail`
/// agrees with it for `k ≥ from`.
fn scaled_extremes(
    eval: impl Fn(u64) -> f64,
    tail: &RationalFunction<R>,
    from: u64,
) -> Result<(f64, f64)> {
    let limit = tail
        .limit_at_infinity()
        .ok_or_else(|| Error::Precondition("scaled weight is unbounded".into()))?
        .to_f64();
    let bound = tail
        .derivative_numerator()
        .cauchy_bound()
        .map(|b| b.to_f64().ceil() as u64)
        .unwrap_or(0);
    let last = bound.max(from);
    if last > MAX_SCAN {
        return Err(Error::Precondition(format!(
            "monotonicity only from k = {last}; scan too long"
        )));
    }
    let (mut lo, mut hi) = (limit.abs(), limit.abs());
    for k in 0..=last {
        let g = eval(k).abs();
        lo = lo.min(g);
        hi = hi.max(g);
    }
    // the monotone tail changes sign at most once, and then gets arbitrarily close to zero
    if eval(last) * limit < 0.0 {
        lo = 0.0;
    }
    Ok((lo, hi))
}

fn scaled<'a, F: Fn(&WeightSequences<f64>, u64) -> f64 + 'a>(
    w: &'a WeightSequences<f64>,
    f: F,
) -> impl Fn(u64) -> f64 + 'a {
    move |k| {
        let k1 = (k + 1) as f64;
        k1 * k1 * k1 * f(w, k)
    }
}

fn exact_exponents(s: f64, t: f64) -> Result<(R, R)> {
    match (R::from_f64(s), R::from_f64(t)) {
        (Some(s), Some(t)) if s >= R::from_int(0) && t >= R::from_int(0) => Ok((s, t)),
        _ => Err(Error::Precondition(
            "exponents must be finite and nonnegative".into(),
        )),
    }
}

/// Constants `C₁…C₆` and the resulting thresholds.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SafeInterval {
    /// `[C₁, C₂, C₃, C₄, C₅, C₆]`: bounds of `(k+1)³` times `σ`, `ω`, `|δ|`.
    pub constants: [f64; 6],
    pub c_minus: f64,
    pub c_plus: f64,
    pub r_low: f64,
    pub r_high: f64,
}

impl SafeInterval {
    /// `|a|` outside `[r_low, r_high]` certifies hyponormality.
    pub fn certifies(&self, r: f64) -> bool {
        r < self.r_low || r > self.r_high
    }
}

/// Thresholds for `z^n|z|^s + a·z^m|z|^t`, `m < n`.
pub fn safe_interval_complement(m: u64, n: u64, s: f64, t: f64) -> Result<SafeInterval> {
    if m == 0 || m >= n {
        return Err(Error::Precondition(format!(
            "need 0 < m < n, got m = {m}, n = {n}"
        )));
    }
    let (sq, tq) = exact_exponents(s, t)?;
    let wq = weight_sequences(m, n, sq.clone(), tq.clone());
    let wf = weight_sequences(m, n, s, t);
    let (c1, c2) = scaled_extremes(scaled(&wf, |w, k| w.sigma(k)), &diagonal_tail(n, &sq), n)?;
    let (c3, c4) = scaled_extremes(scaled(&wf, |w, k| w.omega(k)), &diagonal_tail(m, &tq), m)?;
    let (c5, c6) = scaled_extremes(scaled(&wf, |w, k| w.delta(k)), &delta_tail(&wq), m)?;
    let constants = [c1, c2, c3, c4, c5, c6];
    let c_minus = constants.iter().cloned().fold(f64::INFINITY, f64::min) * (1.0 - MARGIN);
    let c_plus = constants.iter().cloned().fold(0.0, f64::max) * (1.0 + MARGIN);
    if !(c_minus > 0.0) {
        return Err(Error::HypothesisFailure(
            "a scaled weight sequence approaches zero".into(),
        ));
    }
    let centre = ((n - m + 1) as f64).powf(1.5) * c_plus / c_minus;
    let root = (centre * centre - 1.0).sqrt();
    // 1/(centre + root) avoids cancellation in the small root
    let (r_low, r_high) = (1.0 / (centre + root), centre + root);
    Ok(SafeInterval {
        constants,
        c_minus,
        c_plus,
        r_low: r_low * (1.0 - MARGIN),
        r_high: r_high * (1.0 + MARGIN),
    })
}

/// `|a|` up to which `z^n|z|^s + a·z̄^m|z|^t` is certified hyponormal, from
/// `σ̂′ − r²ω̂ − 2r·Σ|δ′_k|u_k u_{k+n+m} ≥ 0` under the same comparison with `1/(k+1)³`.
pub fn conjugate_small_bound(m: u64, n: u64, s: f64, t: f64) -> Result<f64> {
    if m == 0 || n == 0 {
        return Err(Error::Precondition("m and n must be positive".into()));
    }
    let (sq, tq) = exact_exponents(s, t)?;
    let wq = weight_sequences(m, n, sq.clone(), tq.clone());
    let wf = weight_sequences(m, n, s, t);
    let (c1, _) = scaled_extremes(scaled(&wf, |w, k| w.sigma(k)), &diagonal_tail(n, &sq), n)?;
    let (_, c4) = scaled_extremes(scaled(&wf, |w, k| w.omega(k)), &diagonal_tail(m, &tq), m)?;
    let (_, c6) = scaled_extremes(
        scaled(&wf, |w, k| w.delta_prime(k)),
        &delta_prime_tail(&wq),
        0,
    )?;
    let c1 = c1 * (1.0 - MARGIN);
    let (c4, c6) = (c4 * (1.0 + MARGIN), c6 * (1.0 + MARGIN));
    if !(c1 > 0.0) {
        return Err(Error::HypothesisFailure(
            "the diagonal weight approaches zero".into(),
        ));
    }
    let b = c6 * ((n + m + 1) as f64).powf(1.5);
    // positive root of c4·r² + 2b·r − c1, written without cancellation
    Ok(c1 / (b + (b * b + c4 * c1).sqrt()) * (1.0 - MARGIN))
}
