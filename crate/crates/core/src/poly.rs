//! Dense univariate polynomials with coefficients in a [`Scalar`], plus the small
//! amount of root bounding the positivity checks need.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::{format_scalar, Scalar};

/// Ascending-degree coefficients; trailing zeros are trimmed, so the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `a + b·x`
    pub fn linear(a: T, b: T) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let out = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(T::zero);
                let b = other.coeffs.get(i).cloned().unwrap_or_else(T::zero);
                a + b
            })
            .collect();
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(T::one()), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_u64(i as u64))
                .collect(),
        )
    }

    /// Cauchy bound `1 + max |c_i / c_deg|`: every real root lies in `(−R, R)`.
    pub fn cauchy_bound(&self) -> Option<T> {
        let lead = self.leading()?.clone();
        let deg = self.degree()?;
        let max = self.coeffs[..deg]
            .iter()
            .map(|c| (c.clone() / lead.clone()).abs())
            .fold(T::zero(), T::max_of);
        Some(T::one() + max)
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = format_scalar(&c.abs());
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*x")?,
                _ => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Serializable view of a polynomial: coefficients as strings, ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyCoefficients(pub Vec<String>);

impl<T: Scalar> From<&Poly<T>> for PolyCoefficients {
    fn from(p: &Poly<T>) -> Self {
        Self(p.coeffs.iter().map(format_scalar).collect())
    }
}

/// `num / den` with `den` nonvanishing on the region of interest.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction<T> {
    pub num: Poly<T>,
    pub den: Poly<T>,
}

impl<T: Scalar> RationalFunction<T> {
    pub fn new(num: Poly<T>, den: Poly<T>) -> Self {
        Self { num, den }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone());
        }
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&Self::new(other.num.neg(), other.den.clone()))
    }

    pub fn mul_poly(&self, p: &Poly<T>) -> Self {
        Self::new(self.num.mul(p), self.den.clone())
    }

    pub fn eval(&self, x: &T) -> T {
        self.num.eval(x) / self.den.eval(x)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    /// Numerator of the derivative, `num'·den − num·den'`; its sign is the sign of the derivative.
    pub fn derivative_numerator(&self) -> Poly<T> {
        self.num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()))
    }

    /// `lim_{x→∞}`, or `None` when the function is unbounded.
    pub fn limit_at_infinity(&self) -> Option<T> {
        let dn = self.num.degree();
        let dd = self.den.degree()?;
        match dn {
            None => Some(T::zero()),
            Some(d) if d < dd => Some(T::zero()),
            Some(d) if d == dd => Some(self.num.leading()?.clone() / self.den.leading()?.clone()),
            Some(_) => None,
        }
    }
}
