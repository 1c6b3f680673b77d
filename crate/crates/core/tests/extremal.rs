mod common;

use common::Q;
use hyponorm::commutator::worst_case_quadratic;
use hyponorm::extremal::{
    annulus_for_trial, asymptotic_interval, cinf_quotient, excluded_region, linear_block,
    pencil_infimum, RatioSide,
};
use hyponorm::Scalar;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn excluded_points_are_refuted_by_their_trials() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (m, n, s, t) in [(1u64, 2u64, 1.0, 0.0), (1, 3, 2.0, 0.0), (2, 3, 0.0, 2.5)] {
        let region = excluded_region(m, n, s, t, 120).unwrap();
        assert!(!region.annuli.is_empty(), "{m} {n} {s} {t}");
        for _ in 0..50 {
            let a = &region.annuli[rng.gen_range(0..region.annuli.len())];
            let r = rng.gen_range(a.interval.lo..a.interval.hi);
            let q = worst_case_quadratic(m, n, s, t, &a.vector, &r).unwrap();
            assert!(q < 0.0, "{} at {r}: {q}", a.trial);
            assert_eq!(
                region.witness_for(r).map(|w| w.interval.contains(r)),
                Some(true)
            );
        }
    }
}

#[test]
fn pencil_is_nonincreasing_and_respects_the_sufficiency_bound() {
    for (n, s) in [(1u64, 2i64), (2, 4), (1, 3), (3, 7), (7, 1), (2, 1)] {
        let s = Q::from_int(s);
        let mut prev: Option<Q> = None;
        for size in [16, 32, 64, 128, 256, 512] {
            let est = pencil_infimum(n, &s, size).unwrap();
            assert_eq!(est.side, RatioSide::UpperBound);
            assert_eq!(
                cinf_quotient(n, &s, &est.vector).unwrap().finite(),
                Some(&est.value)
            );
            if let Some(p) = &prev {
                // rounding to 2^40 can only move the value by a relative 1e-9
                assert!(
                    est.value.to_f64() <= p.to_f64() * (1.0 + 1e-9),
                    "n={n} s={s} N={size}"
                );
            }
            if s >= Q::from_u64(2 * n) {
                assert!(est.value >= Q::from_u64(n) / s.clone());
            }
            prev = Some(est.value);
        }
    }
}

#[test]
fn block_family_approaches_n_over_s() {
    for (n, s) in [(1u64, 2.0), (2, 4.0), (1, 3.0)] {
        let bound = n as f64 / s;
        let values: Vec<f64> = [50usize, 100, 200]
            .iter()
            .map(|&x| {
                cinf_quotient(n, &s, &linear_block::<f64>(x, x * x))
                    .unwrap()
                    .to_f64()
            })
            .collect();
        assert!(values.windows(2).all(|w| w[1] < w[0]), "{values:?}");
        for (x, v) in [50f64, 100.0, 200.0].iter().zip(&values) {
            assert!(
                *v >= bound && *v <= bound * (1.0 + 3.0 / x.ln()),
                "n={n} s={s} x={x} v={v}"
            );
        }
    }
}

#[test]
fn block_annuli_match_the_limit_interval() {
    for (m, n, s, t) in [
        (1u64, 2u64, 1i64, 0i64),
        (1, 3, 2, 0),
        (2, 3, 0, 1),
        (1, 2, 3, 1),
    ] {
        let (lo, hi) = asymptotic_interval(m, n, Q::from_int(s), Q::from_int(t))
            .unwrap()
            .unwrap();
        let (lo, hi) = (lo.to_f64(), hi.to_f64());
        let u = linear_block::<f64>(200, 200 * 200);
        let got = annulus_for_trial(m, n, s as f64, t as f64, &u)
            .unwrap()
            .unwrap();
        assert!(
            (got.lo - lo).abs() <= 0.02 * lo,
            "{m} {n} {s} {t}: {got:?} vs ({lo}, {hi})"
        );
        assert!(
            (got.hi - hi).abs() <= 0.02 * hi,
            "{m} {n} {s} {t}: {got:?} vs ({lo}, {hi})"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sufficiency_bound_holds_for_random_parameters(n in 1u64..5, extra in 0i64..6, size in 8usize..200) {
        let s = Q::from_u64(2 * n) + Q::from_int(extra);
        prop_assume!(size as u64 >= n);
        let est = pencil_infimum(n, &s, size).unwrap();
        prop_assert!(est.value >= Q::from_u64(n) / s);
    }

    #[test]
    fn trial_annuli_are_where_the_quadratic_is_negative(
        u in proptest::collection::vec(0u8..5, 2..40),
        r in 0.01f64..10.0,
    ) {
        let u: Vec<f64> = u.into_iter().map(f64::from).collect();
        prop_assume!(u.iter().any(|&x| x > 0.0));
        let q = worst_case_quadratic(1, 2, 1.0, 0.0, &u, &r).unwrap();
        match annulus_for_trial(1, 2, 1.0, 0.0, &u).unwrap() {
            Some(iv) if iv.contains(r) => prop_assert!(q <= 1e-12),
            _ => prop_assert!(q >= -1e-12),
        }
    }
}
