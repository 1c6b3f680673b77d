mod common;

use common::{symbol, Q};
use hyponorm::oracle::quad_inner_product;
use hyponorm::projection::{
    merge_by_degree, monomial_inner_product, monomial_norm_sq, project_monomial, toeplitz_apply,
};
use hyponorm::Scalar;
use num_traits::Zero;
use proptest::prelude::*;

#[test]
fn projection_is_the_normalized_inner_product() {
    for t in [
        Q::from_int(0),
        Q::ratio(1, 2),
        Q::from_int(1),
        Q::ratio(5, 2),
    ] {
        for k in 0..=50u64 {
            for j in 0..=k {
                let p = project_monomial(k, j, &t);
                let expected = monomial_inner_product(k, j, &t, k - j, 0, &Q::from_int(0))
                    / monomial_norm_sq::<Q>(k - j);
                assert_eq!(p.degree, k - j);
                assert_eq!(p.coeff.re, expected, "k={k} j={j} t={t}");
                assert!(p.coeff.im.is_zero());
            }
        }
    }
}

#[test]
fn closed_form_matches_quadrature() {
    for a in 0..=6u64 {
        for b in 0..=6u64 {
            for c in 0..=6u64 {
                for d in 0..=6u64 {
                    for (s, t) in [(0.0, 0.0), (0.5, 1.0), (2.5, 0.0), (1.0, 3.0)] {
                        let closed = monomial_inner_product(a, b, &s, c, d, &t);
                        let quad = quad_inner_product(a, b, s, c, d, t).unwrap();
                        assert!((closed - quad).abs() < 1e-10, "{a} {b} {s} {c} {d} {t}");
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn toeplitz_apply_is_linear(p in symbol(3), q in symbol(3), k in 0u64..10) {
        let sum = p.add(&q);
        let joint = merge_by_degree(toeplitz_apply(&sum, k));
        let split = merge_by_degree(toeplitz_apply(&p, k).into_iter().chain(toeplitz_apply(&q, k)));
        prop_assert_eq!(joint, split);
    }
}
