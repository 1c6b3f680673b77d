//! Verdicts and the certificates attached to them.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::commutator::commutator_value;
use crate::error::{Error, Result};
use crate::scalar::{format_complex, format_rational, Rational};
use crate::symbol::{parse_symbol, RadialSymbol};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Hyponormal,
    NotHyponormal,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Hyponormal => "Hyponormal",
            Status::NotHyponormal => "NotHyponormal",
            Status::Inconclusive => "Inconclusive",
        };
        f.write_str(s)
    }
}

/// The criterion a verdict rests on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// Analytic symbols give subnormal, hence hyponormal, operators.
    AnalyticSymbol,
    /// Purely radial symbols give diagonal, hence normal, operators.
    RadialSymbol,
    /// `z^n + C|z|^s` with `|C| > n/s`.
    ZnRadialNecessary,
    /// `z^n + C|z|^s` with `|C| ≤ n/s` and `s ≥ 2n`.
    ZnRadialSufficient,
    /// `z^n + C|z|^s` with `|C|` above an explicit value of the extremal quotient.
    ZnRadialPencil,
    /// `z^n|z|^s`.
    PureRadialPower,
    /// `|z|^s(z^n + a·z̄^n)`.
    ConjugatePair,
    /// `z^n|z|^s + a·z̄^m|z|^t` refuted by a trial-vector bound.
    ConjugateTrialBound,
    /// `z^n|z|^s + a·z̄^m|z|^t` with `|a|` below the Cauchy–Schwarz threshold.
    ConjugateSmallBound,
    /// `z^n|z|^s + a·z^m|z|^t` with `|a|` outside the safe interval.
    AdditiveSafeInterval,
    /// `z^n|z|^s + a·z^m|z|^t` with `|a|` inside an excluded annulus.
    AdditiveAnnulus,
    /// `z^m·Σ a_j|z|^{s_j}` with `a_1 = −1`.
    AlgebraicLeadingNegative,
    /// `z^m·(|z|^{s_0} + a_1|z|^{s_1})` with a negative quintic leading coefficient.
    AlgebraicLeadingCoefficient,
    /// `z^m·(|z|^{s_0} + a_1|z|^{s_1})` with `Re a_1 > 0`.
    AlgebraicPositiveCoefficients,
    /// `z^m·Σ a_j|z|^{s_j}` decided by polynomial positivity on the integer ray.
    AlgebraicRayPositivity,
    /// A vector with negative commutator form, found by truncated eigen-search.
    EigenCertificate,
    /// No criterion applied.
    NoCriterion,
}

impl Source {
    pub fn tag(&self) -> &'static str {
        match self {
            Source::AnalyticSymbol => "analytic-symbol",
            Source::RadialSymbol => "radial-symbol",
            Source::ZnRadialNecessary => "zn-radial-necessary",
            Source::ZnRadialSufficient => "zn-radial-sufficient",
            Source::ZnRadialPencil => "zn-radial-pencil",
            Source::PureRadialPower => "pure-radial-power",
            Source::ConjugatePair => "conjugate-pair",
            Source::ConjugateTrialBound => "conjugate-trial-bound",
            Source::ConjugateSmallBound => "conjugate-small-bound",
            Source::AdditiveSafeInterval => "additive-safe-interval",
            Source::AdditiveAnnulus => "additive-annulus",
            Source::AlgebraicLeadingNegative => "algebraic-leading-negative",
            Source::AlgebraicLeadingCoefficient => "algebraic-leading-coefficient",
            Source::AlgebraicPositiveCoefficients => "algebraic-positive-coefficients",
            Source::AlgebraicRayPositivity => "algebraic-ray-positivity",
            Source::EigenCertificate => "eigen-certificate",
            Source::NoCriterion => "no-criterion",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A vector with Gaussian-integer entries and its exact commutator form value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Entries `u_0, u_1, …` as `a`, `b*i` or `a+b*i`.
    pub vector: Vec<String>,
    /// `⟨[T*,T]u, u⟩` as `p/q`.
    pub value: String,
    /// Degree bound of the truncation the vector came from.
    pub truncation: usize,
}

impl Witness {
    pub fn new(vector: &[Complex<Rational>], value: &Rational, truncation: usize) -> Self {
        Self {
            vector: vector.iter().map(format_complex).collect(),
            value: format_rational(value),
            truncation,
        }
    }

    pub fn parse_vector(&self) -> Result<Vec<Complex<Rational>>> {
        self.vector
            .iter()
            .map(|e| {
                parse_symbol(e)?.as_constant().ok_or_else(|| {
                    Error::Precondition(format!("witness entry `{e}` is not a number"))
                })
            })
            .collect()
    }

    /// Recomputes the form value exactly and checks it is the recorded negative number.
    pub fn replay(&self, phi: &RadialSymbol<Rational>) -> Result<Rational> {
        let u = self.parse_vector()?;
        let value = commutator_value(phi, &u);
        if format_rational(&value) != self.value {
            return Err(Error::Precondition(format!(
                "witness value {} does not match recomputed {}",
                self.value,
                format_rational(&value)
            )));
        }
        Ok(value)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub verdict: Status,
    pub source: Source,
    /// One-line human-readable justification.
    pub detail: String,
    /// Named parameters the criterion was applied with.
    pub parameters: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn new(verdict: Status, source: Source, detail: impl Into<String>) -> Self {
        Self {
            verdict,
            source,
            detail: detail.into(),
            parameters: BTreeMap::new(),
            witness: None,
        }
    }

    pub fn hyponormal(source: Source, detail: impl Into<String>) -> Self {
        Self::new(Status::Hyponormal, source, detail)
    }

    pub fn not_hyponormal(source: Source, detail: impl Into<String>) -> Self {
        Self::new(Status::NotHyponormal, source, detail)
    }

    pub fn inconclusive(source: Source, detail: impl Into<String>) -> Self {
        Self::new(Status::Inconclusive, source, detail)
    }

    pub fn with_param(mut self, name: &str, value: impl fmt::Display) -> Self {
        self.parameters.insert(name.to_string(), value.to_string());
        self
    }

    pub fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn status(&self) -> Status {
        self.verdict
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]: {}", self.verdict, self.source, self.detail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{cx, Scalar};
    use num_traits::Signed;

    #[test]
    fn witness_replays() {
        let phi = parse_symbol("z + zbar*(21/20)").unwrap();
        let u = vec![cx(Rational::from_int(1), Rational::from_int(0))];
        let value = commutator_value(&phi, &u);
        assert!(value.is_negative());
        let w = Witness::new(&u, &value, 0);
        assert_eq!(w.replay(&phi).unwrap(), value);
        let forged = Witness {
            value: "-1".into(),
            ..w
        };
        assert!(forged.replay(&phi).is_err());
    }

    #[test]
    fn complex_entries_round_trip() {
        let u = vec![
            cx(Rational::from_int(3), Rational::from_int(-4)),
            cx(Rational::from_int(0), Rational::from_int(7)),
            cx(Rational::from_int(-2), Rational::from_int(0)),
        ];
        let w = Witness::new(&u, &Rational::from_int(-1), 2);
        assert_eq!(w.parse_vector().unwrap(), u);
    }
}
