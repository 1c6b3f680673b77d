//! Symbols `z^m·Σ a_j|z|^{s_j}` with `a_0 = 1` and every `s_j > 0`.
//!
//! `T_φ` is a weighted shift, so hyponormality reduces to the sign of one diagonal entry
//! per degree `α ≥ m`, which after clearing denominators is a real polynomial in `α`.

use num_complex::Complex;

use super::ray::{check_positivity_on_ray, RayPositivity, RealPolynomial};
use crate::commutator::commutator_value;
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyCoefficients};
use crate::scalar::{cx, cx_real, format_scalar, Rational, Scalar};
use crate::symbol::{Monomial, RadialSymbol};
use crate::verdict::{Source, Verdict, Witness};
use num_traits::Signed;

fn validate<T: Scalar>(exponents: &[T], coeffs: &[Complex<T>]) -> Result<()> {
    if exponents.len() != coeffs.len() + 1 {
        return Err(Error::Precondition(format!(
            "{} exponents need {} coefficients, got {}",
            exponents.len(),
            exponents.len().saturating_sub(1),
            coeffs.len()
        )));
    }
    if let Some(s) = exponents.iter().find(|s| !s.is_positive()) {
        return Err(Error::Precondition(format!(
            "exponent {} is not positive",
            format_scalar(s)
        )));
    }
    Ok(())
}

fn all_coeffs<T: Scalar>(coeffs: &[Complex<T>]) -> Vec<Complex<T>> {
    std::iter::once(cx_real(T::one()))
        .chain(coeffs.iter().cloned())
        .collect()
}

/// `|Σ_j c_j Π_{i≠j} f_i|²` and `Π f_i²` for linear factors `f_i`.
fn cleared_square<T: Scalar>(c: &[Complex<T>], factors: &[Poly<T>]) -> (Poly<T>, Poly<T>) {
    let (mut re, mut im) = (Poly::zero(), Poly::zero());
    for (j, cj) in c.iter().enumerate() {
        let others = factors
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != j)
            .fold(Poly::constant(T::one()), |acc, (_, f)| acc.mul(f));
        re = re.add(&others.scale(&cj.re));
        im = im.add(&others.scale(&cj.im));
    }
    let prod = factors
        .iter()
        .fold(Poly::constant(T::one()), |acc, f| acc.mul(f));
    (re.mul(&re).add(&im.mul(&im)), prod.mul(&prod))
}

/// The polynomial `𝒫(α)` whose nonnegativity on the integers `α ≥ m` is equivalent to
/// hyponormality, with denominators `α+m+1+s_j/2` and `α+1+s_j/2`.
pub fn alph_polynomial<T: Scalar>(
    m: u64,
    exponents: &[T],
    coeffs: &[Complex<T>],
) -> Result<RealPolynomial<T>> {
    validate(exponents, coeffs)?;
    let c = all_coeffs(coeffs);
    let half = |s: &T| s.clone() / T::from_int(2);
    let p: Vec<Poly<T>> = exponents
        .iter()
        .map(|s| Poly::linear(T::from_u64(m + 1) + half(s), T::one()))
        .collect();
    let q: Vec<Poly<T>> = exponents
        .iter()
        .map(|s| Poly::linear(T::one() + half(s), T::one()))
        .collect();
    let (num_p, den_p) = cleared_square(&c, &p);
    let (num_q, den_q) = cleared_square(&c, &q);
    let plus = Poly::linear(T::from_u64(m + 1), T::one());
    let minus = Poly::linear(T::one() - T::from_u64(m), T::one());
    Ok(plus
        .mul(&num_p)
        .mul(&den_q)
        .sub(&minus.mul(&num_q).mul(&den_p)))
}

/// `(α+m+1)|Σ a_j/(2α+2m+2+s_j)|² − (α−m+1)|Σ a_j/(2α+2+s_j)|²`, evaluated directly.
pub fn alph_gap<T: Scalar>(
    m: u64,
    exponents: &[T],
    coeffs: &[Complex<T>],
    alpha: u64,
) -> Result<T> {
    validate(exponents, coeffs)?;
    let c = all_coeffs(coeffs);
    let sum = |base: u64| {
        c.iter()
            .zip(exponents)
            .fold(cx_real(T::zero()), |acc, (cj, s)| {
                acc + cj.clone() / cx_real(T::from_u64(base) + s.clone())
            })
    };
    let a = sum(2 * alpha + 2 * m + 2);
    let b = sum(2 * alpha + 2);
    Ok(T::from_u64(alpha + m + 1) * a.norm_sqr()
        - (T::from_u64(alpha + 1) - T::from_u64(m)) * b.norm_sqr())
}

/// `φ = z^m(|z|^{s_0} + Σ_{j≥1} a_j|z|^{s_j})` as an exact symbol.
fn algebraic_symbol<T: Scalar>(
    m: u64,
    exponents: &[T],
    coeffs: &[Complex<T>],
) -> Result<RadialSymbol<Rational>> {
    let m = u32::try_from(m).map_err(|_| Error::Precondition("m is too large".into()))?;
    let terms = all_coeffs(coeffs)
        .iter()
        .zip(exponents)
        .map(|(c, s)| {
            Monomial::new(
                cx(c.re.to_rational(), c.im.to_rational()),
                m,
                0,
                s.to_rational(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RadialSymbol::new(terms).normalize())
}

/// The form is diagonal; `e_α` is a witness exactly when the entry at `α` is negative.
fn unit_witness(phi: &RadialSymbol<Rational>, alpha: u64) -> Option<Witness> {
    let mut u = vec![cx_real(Rational::from_int(0)); alpha as usize + 1];
    u[alpha as usize] = cx_real(Rational::from_int(1));
    let value = commutator_value(phi, &u);
    value
        .is_negative()
        .then(|| Witness::new(&u, &value, alpha as usize))
}

fn with_polynomial<T: Scalar>(v: Verdict, poly: &Poly<T>) -> Verdict {
    let coeffs: PolyCoefficients = poly.into();
    v.with_param("polynomial", poly)
        .with_param("coefficients", coeffs.0.join(","))
}

/// Verdict for `z^m(|z|^{s_0} + a_1|z|^{s_1} + …)`.
pub fn classify_algebraic<T: Scalar>(
    m: u64,
    exponents: &[T],
    coeffs: &[Complex<T>],
) -> Result<Verdict> {
    if m == 0 {
        return Err(Error::Precondition("m must be positive".into()));
    }
    let poly = alph_polynomial(m, exponents, coeffs)?;
    let phi = algebraic_symbol(m, exponents, coeffs)?;
    let ray = check_positivity_on_ray(&poly, m)?;
    let violation = |v: Verdict| -> Verdict {
        let v = with_polynomial(v, &poly);
        match ray {
            RayPositivity::ViolatedAt(alpha) => {
                let v = v.with_param("alpha", alpha);
                match unit_witness(&phi, alpha) {
                    Some(w) => v.with_witness(w),
                    None => v,
                }
            }
            _ => v,
        }
    };

    if let ([s0, s1], [a1]) = (exponents, coeffs) {
        if s0 != s1 {
            let minus_one = cx_real(-T::one());
            if *a1 == minus_one {
                return Ok(violation(Verdict::not_hyponormal(
                    Source::AlgebraicLeadingNegative,
                    "a₁ = −1: the quartic leading coefficient −(m/2)(s₀−s₁)² is negative",
                ))
                .with_param(
                    "leading_coefficient",
                    format_scalar(poly.leading().expect("nonzero")),
                ));
            }
            let one_plus = cx_real(T::one()) + a1.clone();
            let lead = T::from_u64(m)
                * ((T::from_u64(m) + s1.clone()) * one_plus.norm_sqr()
                    + (s0.clone() - s1.clone()) * (a1.re.clone() + T::one()));
            if lead.is_negative() {
                return Ok(violation(Verdict::not_hyponormal(
                    Source::AlgebraicLeadingCoefficient,
                    "m + s₁ < (s₁ − s₀)·Re[1/(1+a₁)]: the quintic leading coefficient is negative",
                ))
                .with_param("leading_coefficient", format_scalar(&lead)));
            }
            if a1.re.is_positive() && poly.coeffs().iter().all(|c| c.is_positive()) {
                return Ok(with_polynomial(
                    Verdict::hyponormal(
                        Source::AlgebraicPositiveCoefficients,
                        "Re a₁ > 0: every coefficient of the polynomial is positive",
                    ),
                    &poly,
                ));
            }
        }
    }

    Ok(match ray {
        RayPositivity::Nonnegative => with_polynomial(
            Verdict::hyponormal(
                Source::AlgebraicRayPositivity,
                format!("polynomial nonnegative at every integer α ≥ {m}"),
            ),
            &poly,
        ),
        RayPositivity::ViolatedAt(alpha) => violation(Verdict::not_hyponormal(
            Source::AlgebraicRayPositivity,
            format!("polynomial negative at α = {alpha}"),
        )),
        RayPositivity::Uncertain(alpha) => with_polynomial(
            Verdict::inconclusive(
                Source::AlgebraicRayPositivity,
                format!("polynomial within rounding margin of zero at α = {alpha}"),
            ),
            &poly,
        )
        .with_param("alpha", alpha),
    })
}
