//! Shared generators for the integration tests.
#![allow(dead_code)]

use num_complex::{Complex, Complex64};
use proptest::prelude::*;

use hyponorm::scalar::cx;
use hyponorm::{Monomial, RadialSymbol, Rational, Scalar};

pub type Q = Rational;

pub const RADIALS: [(i64, i64); 5] = [(0, 1), (1, 2), (1, 1), (2, 1), (7, 2)];

/// Up to `max_terms` terms with small Gaussian-integer coefficients, not normalized.
pub fn symbol(max_terms: usize) -> impl Strategy<Value = RadialSymbol<Q>> {
    proptest::collection::vec(
        (
            -3i64..=3,
            -3i64..=3,
            0u32..=3,
            0u32..=3,
            0usize..RADIALS.len(),
        ),
        1..=max_terms,
    )
    .prop_map(|terms| {
        RadialSymbol::new(
            terms
                .into_iter()
                .map(|(re, im, h, a, r)| {
                    let (p, q) = RADIALS[r];
                    Monomial::new(cx(Q::from_int(re), Q::from_int(im)), h, a, Q::ratio(p, q))
                        .unwrap()
                })
                .collect(),
        )
    })
}

pub fn gaussian_vector(max_len: usize) -> impl Strategy<Value = Vec<Complex<Q>>> {
    proptest::collection::vec((-5i64..=5, -5i64..=5), 1..=max_len).prop_map(|v| {
        v.into_iter()
            .map(|(a, b)| cx(Q::from_int(a), Q::from_int(b)))
            .collect()
    })
}

pub fn float_vector(max_len: usize) -> impl Strategy<Value = Vec<Complex64>> {
    proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..=max_len)
        .prop_map(|v| v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect())
}

pub fn to_f64(u: &[Complex<Q>]) -> Vec<Complex64> {
    u.iter()
        .map(|z| Complex64::new(z.re.to_f64(), z.im.to_f64()))
        .collect()
}
