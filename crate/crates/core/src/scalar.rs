//! Scalar abstraction shared by the exact (big rational) and floating point paths.
//!
//! Every closed form in this crate is a rational function of the symbol data, so
//! the same generic code runs over [`Rational`] when all inputs are rational and
//! over `f64` otherwise.

use std::fmt;

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Either an exact rational or a double, used where results leave the generic code.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(Rational),
    Float(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(q) => ToPrimitive::to_f64(q).unwrap_or(f64::NAN),
            Value::Float(x) => *x,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Value::Exact(q) => q.is_negative(),
            Value::Float(x) => *x < 0.0,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(q) => write!(f, "{}", format_rational(q)),
            Value::Float(x) => write!(f, "{}", format_float(*x)),
        }
    }
}

pub trait Scalar:
    Clone + fmt::Debug + PartialEq + PartialOrd + Num + Signed + Send + Sync + 'static
{
    /// True for the exact rational path.
    const EXACT: bool;

    fn from_int(v: i64) -> Self;

    fn ratio(p: i64, q: i64) -> Self {
        Self::from_int(p) / Self::from_int(q)
    }

    /// Exact conversion for rationals (every finite double is dyadic); `None` for non-finite input.
    fn from_f64(v: f64) -> Option<Self>;

    fn to_f64(&self) -> f64;

    fn to_value(&self) -> Value;

    /// Exact rational image of the value (floats convert exactly as dyadic rationals).
    fn to_rational(&self) -> Rational;

    /// Nearest value of this type.
    fn from_rational(q: &Rational) -> Self;

    fn from_u64(v: u64) -> Self {
        Self::from_int(v as i64)
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn min_of(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn from_f64(v: f64) -> Option<Self> {
        v.is_finite().then_some(v)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn to_value(&self) -> Value {
        Value::Float(*self)
    }

    fn to_rational(&self) -> Rational {
        <Rational as FromPrimitive>::from_f64(*self).unwrap_or_else(Rational::zero)
    }

    fn from_rational(q: &Rational) -> Self {
        ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_int(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn ratio(p: i64, q: i64) -> Self {
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    fn from_f64(v: f64) -> Option<Self> {
        <Rational as FromPrimitive>::from_f64(v)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn to_value(&self) -> Value {
        Value::Exact(self.clone())
    }

    fn to_rational(&self) -> Rational {
        self.clone()
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

pub fn cx<T: Scalar>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

pub fn cx_real<T: Scalar>(re: T) -> Complex<T> {
    Complex::new(re, T::zero())
}

pub fn cx_to_f64<T: Scalar>(z: &Complex<T>) -> Complex64 {
    Complex64::new(z.re.to_f64(), z.im.to_f64())
}

pub fn cx_from_f64<T: Scalar>(z: Complex64) -> Option<Complex<T>> {
    Some(Complex::new(T::from_f64(z.re)?, T::from_f64(z.im)?))
}

pub fn cx_is_zero<T: Scalar>(z: &Complex<T>) -> bool {
    z.re.is_zero() && z.im.is_zero()
}

pub fn cx_to_rational<T: Scalar>(z: &Complex<T>) -> Complex<Rational> {
    Complex::new(z.re.to_rational(), z.im.to_rational())
}

/// |z| as a double; used only where a square root leaves the exact path.
pub fn cx_abs_f64<T: Scalar>(z: &Complex<T>) -> f64 {
    z.norm_sqr().to_f64().sqrt()
}

/// Pairwise summation. For rationals it keeps operand sizes balanced, which
/// matters once thousands of terms with distinct denominators are added.
pub fn tree_sum<T: Scalar>(mut terms: Vec<T>) -> T {
    if terms.is_empty() {
        return T::zero();
    }
    while terms.len() > 1 {
        let mut next = Vec::with_capacity(terms.len().div_ceil(2));
        let mut it = terms.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a + b),
                None => next.push(a),
            }
        }
        terms = next;
    }
    terms.pop().unwrap()
}

/// Parses a decimal literal such as `12`, `0.25` or `-3.5` into an exact rational.
pub fn parse_decimal(text: &str) -> Option<Rational> {
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    if body.is_empty() {
        return None;
    }
    let (int_part, frac_part) = match body.split_once('.') {
        Some((a, b)) => (a, b),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let num = BigInt::parse_bytes(digits.as_bytes(), 10)?;
    let den = num_traits::pow(BigInt::from(10), frac_part.len());
    let q = Rational::new(num, den);
    Some(if neg { -q } else { q })
}

/// Parses `p/q` or a decimal literal.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p = parse_decimal(p.trim())?;
            let q = parse_decimal(q.trim())?;
            if q.is_zero() {
                None
            } else {
                Some(p / q)
            }
        }
        None => parse_decimal(text),
    }
}

/// `p/q`, or `p` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Twelve significant digits.
pub fn format_float(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        format!("{x:.11e}")
    }
}

pub fn format_scalar<T: Scalar>(x: &T) -> String {
    x.to_value().to_string()
}

pub fn format_complex<T: Scalar>(z: &Complex<T>) -> String {
    if z.im.is_zero() {
        return format_scalar(&z.re);
    }
    let im = if z.im.is_negative() {
        format!("-{}*i", format_scalar(&-z.im.clone()))
    } else {
        format!("+{}*i", format_scalar(&z.im))
    };
    if z.re.is_zero() {
        im.trim_start_matches('+').to_string()
    } else {
        format!("{}{}", format_scalar(&z.re), im)
    }
}

/// Exact integer square root test for a nonnegative rational.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

pub fn one<T: Scalar>() -> T {
    T::one()
}
