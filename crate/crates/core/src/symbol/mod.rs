//! Radial-monomial symbols `Σ a_j z^{m_j} z̄^{n_j} |z|^{s_j}`.

mod parse;

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{cx_is_zero, cx_real, format_scalar, Rational, Scalar};

pub use parse::{parse_symbol, parse_symbol_with_param};

/// Normalized exponent triple: `z z̄` pairs folded into the radial power.
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialKey<T> {
    pub holo: u32,
    pub anti: u32,
    pub radial: T,
}

impl<T: Scalar> MonomialKey<T> {
    pub fn shift(&self) -> i64 {
        i64::from(self.holo) - i64::from(self.anti)
    }

    fn cmp_key(&self, other: &Self) -> Ordering {
        self.shift()
            .cmp(&other.shift())
            .reverse()
            .then(self.holo.cmp(&other.holo))
            .then(
                self.radial
                    .partial_cmp(&other.radial)
                    .unwrap_or(Ordering::Equal),
            )
    }
}

/// One term `coeff · z^holo · z̄^anti · |z|^radial`.
#[derive(Clone, Debug, PartialEq)]
pub struct Monomial<T> {
    coeff: Complex<T>,
    holo: u32,
    anti: u32,
    radial: T,
}

impl<T: Scalar> Monomial<T> {
    pub fn new(coeff: Complex<T>, holo: u32, anti: u32, radial: T) -> Result<Self> {
        if radial.is_negative() {
            return Err(Error::InvalidExponent(format!(
                "radial exponent {} is negative",
                format_scalar(&radial)
            )));
        }
        if !T::EXACT && !radial.to_f64().is_finite() {
            return Err(Error::InvalidExponent(
                "radial exponent is not finite".into(),
            ));
        }
        Ok(Self {
            coeff,
            holo,
            anti,
            radial,
        })
    }

    /// `coeff · z^n`
    pub fn analytic(coeff: Complex<T>, n: u32) -> Self {
        Self::new(coeff, n, 0, T::zero()).expect("zero radial exponent is valid")
    }

    pub fn coeff(&self) -> &Complex<T> {
        &self.coeff
    }

    pub fn holo(&self) -> u32 {
        self.holo
    }

    pub fn anti(&self) -> u32 {
        self.anti
    }

    pub fn radial(&self) -> &T {
        &self.radial
    }

    /// Degree shift `holo − anti` of the induced Toeplitz column.
    pub fn shift(&self) -> i64 {
        i64::from(self.holo) - i64::from(self.anti)
    }

    pub fn key(&self) -> MonomialKey<T> {
        let p = self.holo.min(self.anti);
        MonomialKey {
            holo: self.holo - p,
            anti: self.anti - p,
            radial: self.radial.clone() + T::from_int(2 * i64::from(p)),
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.holo.min(self.anti) == 0
    }

    pub fn conjugate(&self) -> Self {
        Self {
            coeff: self.coeff.conj(),
            holo: self.anti,
            anti: self.holo,
            radial: self.radial.clone(),
        }
    }

    pub fn with_coeff(&self, coeff: Complex<T>) -> Self {
        Self {
            coeff,
            ..self.clone()
        }
    }

    pub fn product(&self, other: &Self) -> Self {
        Self {
            coeff: self.coeff.clone() * other.coeff.clone(),
            holo: self.holo + other.holo,
            anti: self.anti + other.anti,
            radial: self.radial.clone() + other.radial.clone(),
        }
    }

    fn canonical(&self) -> Self {
        let key = self.key();
        Self {
            coeff: self.coeff.clone(),
            holo: key.holo,
            anti: key.anti,
            radial: key.radial,
        }
    }

    pub fn to_f64(&self) -> Monomial<f64> {
        Monomial {
            coeff: crate::scalar::cx_to_f64(&self.coeff),
            holo: self.holo,
            anti: self.anti,
            radial: self.radial.to_f64(),
        }
    }
}

/// A finite sum of monomials, stored as written until [`RadialSymbol::normalize`] is applied.
#[derive(Clone, Debug, PartialEq)]
pub struct RadialSymbol<T> {
    terms: Vec<Monomial<T>>,
}

impl<T: Scalar> Default for RadialSymbol<T> {
    fn default() -> Self {
        Self { terms: Vec::new() }
    }
}

impl<T: Scalar> RadialSymbol<T> {
    pub fn new(terms: Vec<Monomial<T>>) -> Self {
        Self { terms }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Complex<T>) -> Self {
        Self::new(vec![Monomial::analytic(c, 0)]).normalize()
    }

    pub fn monomial(coeff: Complex<T>, holo: u32, anti: u32, radial: T) -> Result<Self> {
        Ok(Self::new(vec![Monomial::new(coeff, holo, anti, radial)?]))
    }

    pub fn terms(&self) -> &[Monomial<T>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Merges terms with equal normalized key, drops zero coefficients and sorts
    /// by decreasing degree shift.
    pub fn normalize(&self) -> Self {
        let mut merged: Vec<Monomial<T>> = Vec::with_capacity(self.terms.len());
        for term in self.terms.iter().map(Monomial::canonical) {
            match merged.iter_mut().find(|m| m.key() == term.key()) {
                Some(existing) => existing.coeff = existing.coeff.clone() + term.coeff,
                None => merged.push(term),
            }
        }
        merged.retain(|m| !cx_is_zero(&m.coeff));
        merged.sort_by(|a, b| a.key().cmp_key(&b.key()));
        Self { terms: merged }
    }

    pub fn is_normalized(&self) -> bool {
        self.terms
            .iter()
            .all(|m| m.is_canonical() && !cx_is_zero(&m.coeff))
            && self
                .terms
                .windows(2)
                .all(|w| w[0].key().cmp_key(&w[1].key()) == Ordering::Less)
    }

    pub fn conjugate(&self) -> Self {
        let conj = Self {
            terms: self.terms.iter().map(Monomial::conjugate).collect(),
        };
        if self.is_normalized() {
            conj.normalize()
        } else {
            conj
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self { terms }.normalize()
    }

    pub fn scale(&self, c: &Complex<T>) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|m| m.with_coeff(m.coeff.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let terms = self
            .terms
            .iter()
            .flat_map(|a| other.terms.iter().map(move |b| a.product(b)))
            .collect();
        Self { terms }.normalize()
    }

    /// Constant value when the symbol is a scalar (possibly zero).
    pub fn as_constant(&self) -> Option<Complex<T>> {
        let n = self.normalize();
        match n.terms.as_slice() {
            [] => Some(cx_real(T::zero())),
            [m] if m.holo == 0 && m.anti == 0 && m.radial.is_zero() => Some(m.coeff.clone()),
            _ => None,
        }
    }

    pub fn max_shift_spread(&self) -> u64 {
        let shifts: Vec<i64> = self.terms.iter().map(Monomial::shift).collect();
        match (shifts.iter().min(), shifts.iter().max()) {
            (Some(lo), Some(hi)) => (hi - lo) as u64,
            _ => 0,
        }
    }

    pub fn to_f64(&self) -> RadialSymbol<f64> {
        RadialSymbol {
            terms: self.terms.iter().map(Monomial::to_f64).collect(),
        }
    }

    /// Exact copy; doubles convert to the dyadic rationals they denote.
    pub fn to_rational(&self) -> RadialSymbol<Rational> {
        RadialSymbol {
            terms: self
                .terms
                .iter()
                .map(|m| Monomial {
                    coeff: crate::scalar::cx_to_rational(&m.coeff),
                    holo: m.holo,
                    anti: m.anti,
                    radial: m.radial.to_rational(),
                })
                .collect(),
        }
    }
}

impl RadialSymbol<Rational> {
    pub fn parse(text: &str) -> Result<Self> {
        parse_symbol(text)
    }
}

fn fmt_coeff<T: Scalar>(c: &Complex<T>, bare: bool) -> (bool, String) {
    // Returns (negative, magnitude text); `bare` means the monomial has no variables.
    if c.im.is_zero() {
        let neg = c.re.is_negative();
        let mag = c.re.abs();
        if mag.is_one() && !bare {
            return (neg, String::new());
        }
        let s = format_scalar(&mag);
        let s = if s.contains('/') || s.contains('e') {
            format!("({s})")
        } else {
            s
        };
        return (neg, s);
    }
    (false, format!("({})", crate::scalar::format_complex(c)))
}

impl<T: Scalar> fmt::Display for Monomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors: Vec<String> = Vec::new();
        match self.holo {
            0 => {}
            1 => factors.push("z".into()),
            k => factors.push(format!("z^{k}")),
        }
        match self.anti {
            0 => {}
            1 => factors.push("zbar".into()),
            k => factors.push(format!("zbar^{k}")),
        }
        if !self.radial.is_zero() {
            let r = format_scalar(&self.radial);
            if r.contains('/') || r.contains('e') {
                factors.push(format!("r^({r})"));
            } else {
                factors.push(format!("r^{r}"));
            }
        }
        let (neg, coeff) = fmt_coeff(&self.coeff, factors.is_empty());
        if neg {
            write!(f, "-")?;
        }
        if !coeff.is_empty() {
            factors.insert(0, coeff);
        }
        write!(f, "{}", factors.join("*"))
    }
}

impl<T: Scalar> fmt::Display for RadialSymbol<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, term) in self.terms.iter().enumerate() {
            let text = term.to_string();
            if i == 0 {
                write!(f, "{text}")?;
            } else if let Some(rest) = text.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {text}")?;
            }
        }
        Ok(())
    }
}
