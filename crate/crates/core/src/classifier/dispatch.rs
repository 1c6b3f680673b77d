//! Pattern-matching dispatch from a symbol to the strongest applicable criterion.

use num_complex::Complex;
use num_traits::{Signed, Zero};

use super::algebraic::classify_algebraic;
use super::families::{
    attach_eigen_witness, classify_additive, classify_conjugate_family, classify_pure_radial_power,
    classify_zn_radial_refined, ClassifyOptions,
};
use crate::commutator::min_eigen_certificate;
use crate::error::Result;
use crate::scalar::Rational;
use crate::symbol::{Monomial, RadialSymbol};
use crate::verdict::{Source, Status, Verdict};

type Q = Rational;

/// The recognised shapes, coefficients already divided by the leading one.
enum Family {
    Constant,
    Analytic,
    Radial,
    PureRadialPower {
        n: u64,
        s: Q,
    },
    ZnRadial {
        n: u64,
        s: Q,
        c: Complex<Q>,
    },
    Additive {
        m: u64,
        n: u64,
        s: Q,
        t: Q,
        a: Complex<Q>,
    },
    Conjugate {
        m: u64,
        n: u64,
        s: Q,
        t: Q,
        a: Complex<Q>,
    },
    Algebraic {
        m: u64,
        exponents: Vec<Q>,
        coeffs: Vec<Complex<Q>>,
    },
    Other,
}

fn is_constant(t: &Monomial<Q>) -> bool {
    t.holo() == 0 && t.anti() == 0 && t.radial().is_zero()
}

fn recognise(phi: &RadialSymbol<Q>) -> Family {
    let terms: Vec<&Monomial<Q>> = phi.terms().iter().filter(|t| !is_constant(t)).collect();
    if terms.is_empty() {
        return Family::Constant;
    }
    if terms.iter().all(|t| t.anti() == 0 && t.radial().is_zero()) {
        return Family::Analytic;
    }
    if terms.iter().all(|t| t.holo() == 0 && t.anti() == 0) {
        return Family::Radial;
    }
    let holo = |t: &Monomial<Q>| u64::from(t.holo());
    let anti = |t: &Monomial<Q>| u64::from(t.anti());
    match terms.as_slice() {
        [p] if p.anti() == 0 => Family::PureRadialPower {
            n: holo(p),
            s: p.radial().clone(),
        },
        [p, q] => {
            let ratio =
                |num: &Monomial<Q>, den: &Monomial<Q>| num.coeff().clone() / den.coeff().clone();
            let (p, q) = if p.holo() >= q.holo() {
                (*p, *q)
            } else {
                (*q, *p)
            };
            if p.anti() == 0 && p.radial().is_zero() && q.holo() == 0 && q.anti() == 0 {
                return Family::ZnRadial {
                    n: holo(p),
                    s: q.radial().clone(),
                    c: ratio(q, p),
                };
            }
            if p.anti() == 0 && q.anti() == 0 && q.holo() > 0 && p.holo() > q.holo() {
                return Family::Additive {
                    m: holo(q),
                    n: holo(p),
                    s: p.radial().clone(),
                    t: q.radial().clone(),
                    a: ratio(q, p),
                };
            }
            if p.anti() == 0 && q.holo() == 0 && q.anti() > 0 {
                return Family::Conjugate {
                    m: anti(q),
                    n: holo(p),
                    s: p.radial().clone(),
                    t: q.radial().clone(),
                    a: ratio(q, p),
                };
            }
            same_holo(&terms)
        }
        _ => same_holo(&terms),
    }
}

/// `z^m·Σ a_j|z|^{s_j}` with every `s_j > 0`.
fn same_holo(terms: &[&Monomial<Q>]) -> Family {
    let m = terms[0].holo();
    let fits = m > 0
        && terms
            .iter()
            .all(|t| t.holo() == m && t.anti() == 0 && t.radial().is_positive());
    if !fits {
        return Family::Other;
    }
    let lead = terms[0].coeff().clone();
    Family::Algebraic {
        m: u64::from(m),
        exponents: terms.iter().map(|t| t.radial().clone()).collect(),
        coeffs: terms[1..]
            .iter()
            .map(|t| t.coeff().clone() / lead.clone())
            .collect(),
    }
}

/// [`classify_with`] under default options.
pub fn classify(phi: &RadialSymbol<Q>) -> Verdict {
    classify_with(phi, &ClassifyOptions::default())
}

/// Exact criteria first, then one-sided ones, then an eigen-search certificate.
/// Scaling the symbol does not change the status. Never fails: criterion errors
/// degrade to the numerical fallback.
pub fn classify_with(phi: &RadialSymbol<Q>, opts: &ClassifyOptions) -> Verdict {
    let phi = phi.normalize();
    let decided = match recognise(&phi) {
        Family::Constant => Ok(Verdict::hyponormal(
            Source::AnalyticSymbol,
            "constant symbol",
        )),
        Family::Analytic => Ok(Verdict::hyponormal(
            Source::AnalyticSymbol,
            "analytic symbol",
        )),
        Family::Radial => Ok(Verdict::hyponormal(
            Source::RadialSymbol,
            "function of |z| only: the operator is diagonal, hence normal",
        )),
        Family::PureRadialPower { n, s } => Ok(classify_pure_radial_power(n, &s)),
        Family::ZnRadial { n, s, c } => {
            classify_zn_radial_refined(n, &s, &c, &opts.pencil_sizes, &opts.witness_schedule)
        }
        Family::Additive { m, n, s, t, a } => classify_additive(m, n, &s, &t, &a, opts),
        Family::Conjugate { m, n, s, t, a } => classify_conjugate_family(m, n, &s, &t, &a, opts),
        Family::Algebraic {
            m,
            exponents,
            coeffs,
        } => classify_algebraic(m, &exponents, &coeffs),
        Family::Other => Ok(Verdict::inconclusive(
            Source::NoCriterion,
            "no closed-form criterion applies",
        )),
    };
    let verdict = match decided {
        Ok(v) => v,
        Err(e) => Verdict::inconclusive(
            Source::NoCriterion,
            format!("criterion not applicable: {e}"),
        ),
    };
    match verdict.verdict {
        Status::Hyponormal => verdict,
        Status::NotHyponormal => attach_eigen_witness(verdict, &phi, &opts.witness_schedule),
        Status::Inconclusive => fallback(verdict, &phi, opts),
    }
}

fn fallback(verdict: Verdict, phi: &RadialSymbol<Q>, opts: &ClassifyOptions) -> Verdict {
    // family classifiers that already searched report the eigen-certificate source
    if verdict.source == Source::EigenCertificate || opts.fallback_schedule.is_empty() {
        return verdict;
    }
    let eigen = min_eigen_certificate(phi, &opts.fallback_schedule, opts.tol);
    if eigen.verdict == Status::NotHyponormal {
        return eigen;
    }
    eigen
        .parameters
        .into_iter()
        .fold(verdict, |v, (k, val)| v.with_param(&k, val))
}

/// Convenience for callers holding text.
pub fn classify_text(text: &str, opts: &ClassifyOptions) -> Result<Verdict> {
    Ok(classify_with(&RadialSymbol::parse(text)?, opts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::parse_symbol;

    fn quick() -> ClassifyOptions {
        ClassifyOptions {
            fallback_schedule: vec![32, 64],
            witness_schedule: vec![32, 64],
            ..ClassifyOptions::default()
        }
    }

    fn run(text: &str) -> Verdict {
        classify_with(&parse_symbol(text).unwrap(), &quick())
    }

    #[test]
    fn dispatch_examples() {
        let v = run("z^3");
        assert_eq!(
            (v.verdict, v.source),
            (Status::Hyponormal, Source::AnalyticSymbol)
        );
        let v = run("z + 3*r^2");
        assert_eq!(
            (v.verdict, v.source),
            (Status::NotHyponormal, Source::ZnRadialNecessary)
        );
        assert!(v.witness.is_some());
        let v = run("z^2*r + 2.5*z");
        assert_eq!(
            (v.verdict, v.source),
            (Status::NotHyponormal, Source::AdditiveAnnulus)
        );
        let phi = parse_symbol("z^2*r + 2.5*z").unwrap();
        assert!(v.witness.unwrap().replay(&phi).unwrap().is_negative());
    }

    #[test]
    fn family_recognition() {
        let cases = [
            ("7", Source::AnalyticSymbol),
            ("r^2 + 3i*r", Source::RadialSymbol),
            ("z*r^2", Source::PureRadialPower),
            ("z + 0.5*r^2", Source::ZnRadialSufficient),
            ("z^2*r^3 + 1i*zbar^2*r^3", Source::ConjugatePair),
            ("z*r + 0.5*z*r^3", Source::AlgebraicPositiveCoefficients),
        ];
        for (text, source) in cases {
            let v = run(text);
            assert_eq!(v.source, source, "{text}: {v}");
            assert_eq!(v.verdict, Status::Hyponormal, "{text}");
        }
    }

    #[test]
    fn scaling_keeps_the_status() {
        for text in [
            "z + 0.6*r^2",
            "z + 0.4*r^2",
            "z^2*r + 2.5*z",
            "z^2 + 0.9*zbar^2",
        ] {
            let base = run(text).verdict;
            let scaled = run(&format!("(-3+2i)*({text})")).verdict;
            assert_eq!(base, scaled, "{text}");
        }
    }

    #[test]
    fn unmatched_symbols_fall_back_to_the_eigen_search() {
        let v = run("zbar");
        assert_eq!(
            (v.verdict, v.source),
            (Status::NotHyponormal, Source::EigenCertificate)
        );
    }
}
