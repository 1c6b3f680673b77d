//! Two-term families with closed-form criteria.

use num_complex::{Complex, Complex64};
use num_traits::Signed;

use super::delta::check_delta_prime_positive;
use crate::commutator::{commutator_value, min_eigen_certificate, round_to_gaussian, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::extremal::{
    conjugate_bound_for_trial, conjugate_small_bound, excluded_region, indicator_block,
    linear_block, pencil_infimum, safe_interval_complement, RatioSide,
};
use crate::scalar::{
    cx_real, cx_to_f64, format_float, format_scalar, rational_sqrt, Rational, Scalar,
};
use crate::symbol::{Monomial, RadialSymbol};
use crate::verdict::{Source, Status, Verdict, Witness};

/// `c·z^holo·z̄^anti·|z|^radial` with `c = 1` unless given.
fn term<T: Scalar>(c: Complex<T>, holo: u64, anti: u64, radial: T) -> Result<Monomial<T>> {
    let cast = |v: u64| {
        u32::try_from(v).map_err(|_| Error::Precondition(format!("power {v} is too large")))
    };
    Monomial::new(c, cast(holo)?, cast(anti)?, radial)
}

fn two_terms<T: Scalar>(first: Monomial<T>, second: Monomial<T>) -> RadialSymbol<Rational> {
    RadialSymbol::new(vec![first, second])
        .normalize()
        .to_rational()
}

/// `u_k = x_k·unit^{⌊k/period⌋}` rounded to Gaussian integers; kept when the exact form is negative.
pub(crate) fn aligned_witness(
    phi: &RadialSymbol<Rational>,
    x: &[f64],
    unit: Complex64,
    period: usize,
    truncation: usize,
) -> Option<Witness> {
    let mut phase = Complex64::new(1.0, 0.0);
    let mut u = Vec::with_capacity(x.len());
    for (k, xk) in x.iter().enumerate() {
        if k > 0 && k % period == 0 {
            phase *= unit;
        }
        u.push(phase * xk);
    }
    let uq = round_to_gaussian(&u, 40);
    let value = commutator_value(phi, &uq);
    value
        .is_negative()
        .then(|| Witness::new(&uq, &value, truncation))
}

/// `−ā/|a|`, the phase that makes every cross term as negative as possible.
fn worst_phase<T: Scalar>(a: &Complex<T>) -> Complex64 {
    let af = cx_to_f64(a);
    -af.conj() / af.norm()
}

/// `|z|² ≤ r²` exactly.
fn modulus_at_most<T: Scalar>(z: &Complex<T>, r: &T) -> bool {
    z.norm_sqr() <= r.clone() * r.clone()
}

/// Attaches an eigen-search witness when one turns up on a short schedule.
pub(crate) fn attach_eigen_witness(
    v: Verdict,
    phi: &RadialSymbol<Rational>,
    schedule: &[usize],
) -> Verdict {
    if v.witness.is_some() || schedule.is_empty() {
        return v;
    }
    match min_eigen_certificate(phi, schedule, DEFAULT_TOL).witness {
        Some(w) => v.with_witness(w),
        None => v,
    }
}

/// `z^n + C|z|^s` from the necessary bound `|C| ≤ n/s` and its converse when `s ≥ 2n`.
pub fn classify_zn_radial<T: Scalar>(n: u64, s: &T, c: &Complex<T>) -> Verdict {
    let bound = T::from_u64(n) / s.clone();
    let params = |v: Verdict| {
        v.with_param("n", n)
            .with_param("s", format_scalar(s))
            .with_param("n_over_s", format_scalar(&bound))
    };
    if c.norm_sqr().is_zero() {
        return params(Verdict::hyponormal(
            Source::AnalyticSymbol,
            "C = 0: the symbol is analytic",
        ));
    }
    if !modulus_at_most(c, &bound) {
        return params(Verdict::not_hyponormal(
            Source::ZnRadialNecessary,
            "|C| > n/s",
        ));
    }
    if *s >= T::from_u64(2 * n) {
        return params(Verdict::hyponormal(
            Source::ZnRadialSufficient,
            "|C| ≤ n/s and s ≥ 2n",
        ));
    }
    params(Verdict::inconclusive(
        Source::ZnRadialNecessary,
        "|C| ≤ n/s but s < 2n: only the necessary bound applies; refine with the pencil quotient",
    ))
}

/// [`classify_zn_radial`], refining the undecided case with explicit quotient values:
/// any vector whose quotient is below `|C|` refutes hyponormality.
pub fn classify_zn_radial_refined<T: Scalar>(
    n: u64,
    s: &T,
    c: &Complex<T>,
    truncations: &[usize],
    witness_schedule: &[usize],
) -> Result<Verdict> {
    let base = classify_zn_radial(n, s, c);
    let phi = two_terms(
        term(cx_real(T::one()), n, 0, T::zero())?,
        term(c.clone(), 0, 0, s.clone())?,
    );
    match base.verdict {
        Status::NotHyponormal => return Ok(attach_eigen_witness(base, &phi, witness_schedule)),
        Status::Hyponormal => return Ok(base),
        Status::Inconclusive => {}
    }
    let mut best: Option<(T, usize)> = None;
    for &size in truncations.iter().filter(|&&size| size as u64 >= n) {
        let est = pencil_infimum(n, s, size)?;
        if est.side != RatioSide::UpperBound {
            continue;
        }
        if best.as_ref().is_none_or(|(v, _)| est.value < *v) {
            best = Some((est.value.clone(), size));
        }
        if est.value.clone() * est.value.clone() < c.norm_sqr() {
            let x: Vec<f64> = est.vector.iter().map(Scalar::to_f64).collect();
            let v = Verdict::not_hyponormal(
                Source::ZnRadialPencil,
                format!(
                    "a vector of degree ≤ {size} has quotient {} < |C|",
                    format_scalar(&est.value)
                ),
            )
            .with_param("n", n)
            .with_param("s", format_scalar(s))
            .with_param("quotient", format_scalar(&est.value))
            .with_param("truncation", size);
            return Ok(
                match aligned_witness(&phi, &x, worst_phase(c), n as usize, size) {
                    Some(w) => v.with_witness(w),
                    None => v,
                },
            );
        }
    }
    Ok(match best {
        Some((v, size)) => base
            .with_param("smallest_quotient", format_scalar(&v))
            .with_param("quotient_truncation", size),
        None => base,
    })
}

/// Some `s` with `T_{z^n + C|z|^s}` not hyponormal: `max(2n/|C|, 2n)`, so `|C| > n/s`
/// and `s ≥ 2n` makes the verdict exact.
pub fn exists_breaking_s<T: Scalar>(n: u64, c: &Complex<T>) -> Result<T> {
    let sq = c.norm_sqr();
    if sq.is_zero() {
        return Err(Error::Precondition("C = 0 gives an analytic symbol".into()));
    }
    // any lower bound ℓ ≤ |C| works: n/s ≤ ℓ/2 < |C|
    let modulus = match rational_sqrt(&sq.to_rational()) {
        Some(exact) => T::from_rational(&exact),
        None => T::from_f64(sq.to_f64().sqrt() * (1.0 - 1e-12))
            .filter(|l| l.is_positive())
            .ok_or_else(|| Error::Precondition("|C| is not representable".into()))?,
    };
    let two_n = T::from_u64(2 * n);
    Ok((two_n.clone() / modulus).max_of(two_n))
}

/// `z^n|z|^s`: always hyponormal.
pub fn classify_pure_radial_power<T: Scalar>(n: u64, s: &T) -> Verdict {
    Verdict::hyponormal(
        Source::PureRadialPower,
        "z^n|z|^s is hyponormal for every n and s",
    )
    .with_param("n", n)
    .with_param("s", format_scalar(s))
}

/// `|z|^s(z^n + a·z̄^n)`: hyponormal iff `|a| ≤ 1`.
pub fn classify_conjugate_pair<T: Scalar>(n: u64, s: &T, a: &Complex<T>) -> Result<Verdict> {
    let params = |v: Verdict| v.with_param("n", n).with_param("s", format_scalar(s));
    if modulus_at_most(a, &T::one()) {
        return Ok(params(Verdict::hyponormal(
            Source::ConjugatePair,
            "|a| ≤ 1",
        )));
    }
    let phi = two_terms(
        term(cx_real(T::one()), n, 0, s.clone())?,
        term(a.clone(), 0, n, s.clone())?,
    );
    // cross weights vanish, so the form is (1 − |a|²)·Σσ_k|u_k|² and e_0 suffices
    let u = [cx_real(Rational::from_int(1))];
    let value = commutator_value(&phi, &u);
    let v = params(
        Verdict::not_hyponormal(Source::ConjugatePair, "|a| > 1").with_param("trial_bound", 1),
    );
    Ok(if value.is_negative() {
        v.with_witness(Witness::new(&u, &value, 0))
    } else {
        v
    })
}

/// Budgets and schedules for the numerical parts of classification.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassifyOptions {
    /// Trial budget for excluded annuli.
    pub budget: usize,
    /// Truncations tried for the pencil quotient.
    pub pencil_sizes: Vec<usize>,
    /// Eigen-search schedule for witnesses of closed-form refutations; empty disables.
    pub witness_schedule: Vec<usize>,
    /// Eigen-search schedule when no criterion decides.
    pub fallback_schedule: Vec<usize>,
    /// Scaled-eigenvalue threshold below which a direction is tried as a witness.
    pub tol: f64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            budget: 200,
            pencil_sizes: vec![32, 128, 512],
            witness_schedule: vec![32, 64, 128, 256],
            fallback_schedule: vec![32, 64, 128, 256, 512, 1024],
            tol: DEFAULT_TOL,
        }
    }
}

/// `z^n|z|^s + a·z^m|z|^t`, `0 < m < n`.
pub fn classify_additive<T: Scalar>(
    m: u64,
    n: u64,
    s: &T,
    t: &T,
    a: &Complex<T>,
    opts: &ClassifyOptions,
) -> Result<Verdict> {
    let r = a.norm_sqr().to_f64().sqrt();
    let params = |v: Verdict| {
        v.with_param("m", m)
            .with_param("n", n)
            .with_param("s", format_scalar(s))
            .with_param("t", format_scalar(t))
            .with_param("abs_a", format_float(r))
    };
    if r == 0.0 {
        return Ok(params(classify_pure_radial_power(n, s)));
    }
    let (sf, tf) = (s.to_f64(), t.to_f64());
    let safe = safe_interval_complement(m, n, sf, tf);
    if let Ok(safe) = &safe {
        if safe.certifies(r) {
            return Ok(params(Verdict::hyponormal(
                Source::AdditiveSafeInterval,
                format!(
                    "|a| outside [{}, {}]",
                    format_float(safe.r_low),
                    format_float(safe.r_high)
                ),
            ))
            .with_param("r_low", format_float(safe.r_low))
            .with_param("r_high", format_float(safe.r_high)));
        }
    }
    let region = excluded_region(m, n, sf, tf, opts.budget)?;
    let phi = two_terms(
        term(cx_real(T::one()), n, 0, s.clone())?,
        term(a.clone(), m, 0, t.clone())?,
    );
    if let Some(hit) = region
        .annuli
        .iter()
        .filter(|an| an.interval.contains(r))
        .min_by_key(|an| an.vector.len())
    {
        let v = params(Verdict::not_hyponormal(
            Source::AdditiveAnnulus,
            format!(
                "|a| lies in the excluded annulus ({}, {}) of trial {}",
                format_float(hit.interval.lo),
                format_float(hit.interval.hi),
                hit.trial
            ),
        ))
        .with_param("trial", &hit.trial)
        .with_param(
            "annulus",
            format!(
                "({}, {})",
                format_float(hit.interval.lo),
                format_float(hit.interval.hi)
            ),
        );
        // exact replay is affordable for short vectors only
        let witness = (hit.vector.len() <= 4096)
            .then(|| {
                aligned_witness(
                    &phi,
                    &hit.vector,
                    worst_phase(a),
                    (n - m) as usize,
                    hit.vector.len() - 1,
                )
            })
            .flatten();
        return Ok(match witness {
            Some(w) => v.with_witness(w),
            None => attach_eigen_witness(v, &phi, &opts.witness_schedule),
        });
    }
    let eigen = min_eigen_certificate(&phi, &opts.fallback_schedule, opts.tol);
    if eigen.verdict == Status::NotHyponormal {
        return Ok(params(eigen));
    }
    let mut v = params(Verdict::inconclusive(
        Source::NoCriterion,
        "|a| is neither in the safe range nor in a certified annulus",
    ));
    if let Ok(safe) = safe {
        v = v
            .with_param("r_low", format_float(safe.r_low))
            .with_param("r_high", format_float(safe.r_high));
    }
    Ok(v)
}

/// Trial vectors for the conjugate-family bound.
fn conjugate_trials(offset: usize, budget: usize) -> Vec<Vec<f64>> {
    let mut out = Vec::new();
    for k in 0..budget.min(32) {
        for w in [0.25, 0.5, 1.0, 2.0, 4.0] {
            let mut u = vec![0.0; k + offset + 1];
            u[k] = 1.0;
            u[k + offset] = w;
            out.push(u);
        }
    }
    let mut len = offset;
    while len <= budget {
        out.push(indicator_block(0, len));
        len *= 2;
    }
    let mut x = 2;
    while x <= budget {
        out.push(linear_block(x, x * x));
        x *= 2;
    }
    out
}

/// `z^n|z|^s + a·z̄^m|z|^t`.
pub fn classify_conjugate_family<T: Scalar>(
    m: u64,
    n: u64,
    s: &T,
    t: &T,
    a: &Complex<T>,
    opts: &ClassifyOptions,
) -> Result<Verdict> {
    if m == n && s == t {
        return classify_conjugate_pair(n, s, a);
    }
    let r = a.norm_sqr().to_f64().sqrt();
    let params = |v: Verdict| {
        v.with_param("m", m)
            .with_param("n", n)
            .with_param("s", format_scalar(s))
            .with_param("t", format_scalar(t))
            .with_param("abs_a", format_float(r))
    };
    if r == 0.0 {
        return Ok(params(classify_pure_radial_power(n, s)));
    }
    let (sf, tf) = (s.to_f64(), t.to_f64());
    let small = conjugate_small_bound(m, n, sf, tf).ok();
    if let Some(b) = small {
        if r <= b {
            return Ok(params(Verdict::hyponormal(
                Source::ConjugateSmallBound,
                format!("|a| ≤ {}", format_float(b)),
            ))
            .with_param("small_bound", format_float(b)));
        }
    }
    let phi = two_terms(
        term(cx_real(T::one()), n, 0, s.clone())?,
        term(a.clone(), 0, m, t.clone())?,
    );
    let sign = check_delta_prime_positive(m, n, s.clone(), t.clone());
    // trials reaching a negative cross weight are rejected individually
    {
        let bounds = crate::par::map(conjugate_trials((n + m) as usize, opts.budget), |u| {
            conjugate_bound_for_trial(m, n, sf, tf, &u).ok()
        });
        let best = bounds.into_iter().flatten().fold(f64::INFINITY, f64::min);
        // float roots: demand a relative gap before refuting
        if best.is_finite() && r > best * (1.0 + 1e-9) {
            let v = params(Verdict::not_hyponormal(
                Source::ConjugateTrialBound,
                format!("|a| exceeds the trial bound {}", format_float(best)),
            ))
            .with_param("trial_bound", format_float(best));
            return Ok(attach_eigen_witness(v, &phi, &opts.witness_schedule));
        }
    }
    let eigen = min_eigen_certificate(&phi, &opts.fallback_schedule, opts.tol);
    if eigen.verdict == Status::NotHyponormal {
        return Ok(params(eigen));
    }
    let mut v = params(Verdict::inconclusive(
        Source::NoCriterion,
        "no bound decides this |a|",
    ))
    .with_param("cross_weight_sign", format!("{sign:?}"));
    if let Some(b) = small {
        v = v.with_param("small_bound", format_float(b));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::DeltaPrimeSign;
    use crate::scalar::{cx, Rational};

    type Q = Rational;

    fn c(re: f64) -> Complex<Q> {
        cx_real(Q::from_f64(re).unwrap())
    }

    #[test]
    fn zn_radial_examples() {
        let two = Q::from_int(2);
        assert_eq!(
            classify_zn_radial(1, &two, &cx_real(Q::ratio(1, 2))).verdict,
            Status::Hyponormal
        );
        assert_eq!(
            classify_zn_radial(1, &two, &cx_real(Q::ratio(3, 5))).verdict,
            Status::NotHyponormal
        );
        let v = classify_zn_radial(7, &Q::from_int(1), &cx_real(Q::ratio(13, 2)));
        assert_eq!(v.verdict, Status::Inconclusive);
        assert_eq!(
            classify_zn_radial(3, &Q::from_int(1), &c(0.0)).source,
            Source::AnalyticSymbol
        );
    }

    #[test]
    fn refinement_refutes_below_n_over_s() {
        let opts = ClassifyOptions::default();
        let phase = cx(Q::ratio(-39, 10), Q::ratio(26, 5)); // |C| = 6.5
        for cc in [cx_real(Q::ratio(13, 2)), phase] {
            let v = classify_zn_radial_refined(7, &Q::from_int(1), &cc, &opts.pencil_sizes, &[])
                .unwrap();
            assert_eq!(
                (v.verdict, v.source),
                (Status::NotHyponormal, Source::ZnRadialPencil)
            );
            let phi = two_terms(
                term(cx_real(Q::from_int(1)), 7, 0, Q::from_int(0)).unwrap(),
                term(cc, 0, 0, Q::from_int(1)).unwrap(),
            );
            assert!(v.witness.unwrap().replay(&phi).unwrap().is_negative());
        }
    }

    #[test]
    fn breaking_exponent() {
        let s: Q = exists_breaking_s(1, &c(1.0)).unwrap();
        assert_eq!(s, Q::from_int(2));
        assert_eq!(
            classify_zn_radial(1, &s, &c(1.0)).verdict,
            Status::NotHyponormal
        );
        let s: Q = exists_breaking_s(3, &cx_real(Q::ratio(1, 1000))).unwrap();
        assert_eq!(s, Q::from_int(6000));
        assert!(exists_breaking_s::<Q>(1, &c(0.0)).is_err());
        let s: f64 = exists_breaking_s(2, &Complex::new(0.3, 0.4)).unwrap();
        assert!(
            s >= 8.0
                && classify_zn_radial(2, &s, &Complex::new(0.3, 0.4)).verdict
                    == Status::NotHyponormal
        );
    }

    #[test]
    fn conjugate_pair_examples() {
        let i = cx(Q::from_int(0), Q::from_int(1));
        assert_eq!(
            classify_conjugate_pair(2, &Q::from_int(3), &i)
                .unwrap()
                .verdict,
            Status::Hyponormal
        );
        let v = classify_conjugate_pair(1, &Q::from_int(0), &c(1.05)).unwrap();
        assert_eq!(v.verdict, Status::NotHyponormal);
        assert!(v.witness.is_some());
        assert_eq!(
            classify_conjugate_pair(1, &Q::from_int(0), &c(0.0))
                .unwrap()
                .verdict,
            Status::Hyponormal
        );
    }

    #[test]
    fn additive_examples() {
        let opts = ClassifyOptions::default();
        let (s, t) = (Q::from_int(1), Q::from_int(0));
        let v = classify_additive(1, 2, &s, &t, &c(2.5), &opts).unwrap();
        assert_eq!(
            (v.verdict, v.source),
            (Status::NotHyponormal, Source::AdditiveAnnulus)
        );
        let phi = two_terms(
            term(cx_real(Q::from_int(1)), 2, 0, s.clone()).unwrap(),
            term(c(2.5), 1, 0, t.clone()).unwrap(),
        );
        assert!(v.witness.unwrap().replay(&phi).unwrap().is_negative());
        let safe = safe_interval_complement(1, 2, 1.0, 0.0).unwrap();
        for r in [safe.r_low / 2.0, safe.r_high * 2.0] {
            let v = classify_additive(1, 2, &s, &t, &c(r), &opts).unwrap();
            assert_eq!(
                (v.verdict, v.source),
                (Status::Hyponormal, Source::AdditiveSafeInterval)
            );
        }
    }

    #[test]
    fn conjugate_family_extremes() {
        let opts = ClassifyOptions::default();
        let (s, t) = (Q::from_int(0), Q::from_int(3));
        assert_eq!(
            check_delta_prime_positive(1, 2, s.clone(), t.clone()),
            DeltaPrimeSign::Holds
        );
        let small = classify_conjugate_family(1, 2, &s, &t, &c(0.001), &opts).unwrap();
        assert_eq!(
            (small.verdict, small.source),
            (Status::Hyponormal, Source::ConjugateSmallBound)
        );
        let large = classify_conjugate_family(1, 2, &s, &t, &c(50.0), &opts).unwrap();
        assert_eq!(large.verdict, Status::NotHyponormal);
    }
}
