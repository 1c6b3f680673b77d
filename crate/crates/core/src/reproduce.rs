//! Recomputes the published numbers and compares each with its stated value.

use std::fmt;
use std::time::{Duration, Instant};

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::classifier::{
    alph_polynomial, classify_conjugate_pair, classify_zn_radial, classify_zn_radial_refined,
};
use crate::extremal::{
    asymptotic_interval, cinf_quotient, conjugate_bound_for_trial, indicator_block,
};
use crate::scalar::{cx_real, format_float, format_rational, Rational, Scalar};
use crate::verdict::Status;

type Q = Rational;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportLine {
    pub name: String,
    pub expected: String,
    pub computed: String,
    /// `exact` or an absolute tolerance.
    pub tolerance: String,
    pub pass: bool,
    pub millis: f64,
}

impl fmt::Display for ReportLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: expected {}, computed {}, tolerance {} ({:.1} ms)",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.expected,
            self.computed,
            self.tolerance,
            self.millis
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub lines: Vec<ReportLine>,
    pub total_millis: f64,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }
}

fn timed(name: &str, f: impl FnOnce() -> (String, String, String, bool)) -> ReportLine {
    let start = Instant::now();
    let (expected, computed, tolerance, pass) = f();
    ReportLine {
        name: name.to_string(),
        expected,
        computed,
        tolerance,
        pass,
        millis: ms(start.elapsed()),
    }
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn q(p: i64, d: i64) -> Q {
    Q::ratio(p, d)
}

fn exact(expected: &Q, computed: &Q) -> (String, String, String, bool) {
    (
        format_rational(expected),
        format_rational(computed),
        "exact".into(),
        expected == computed,
    )
}

fn status_line(expected: Status, computed: Status) -> (String, String, String, bool) {
    (
        expected.to_string(),
        computed.to_string(),
        "exact".into(),
        expected == computed,
    )
}

/// Every line, in a fixed order.
pub fn reproduce() -> Report {
    let start = Instant::now();
    let mut lines = Vec::new();

    let block: Vec<Q> = indicator_block(0, 20);
    let quotient = cinf_quotient(7, &Q::from_int(1), &block)
        .map(|v| v.to_f64())
        .unwrap_or(f64::NAN);
    lines.push(timed("quotient n=7 s=1 u=1 on 0..=20", || {
        let pass = (quotient - 6.41441).abs() <= 5e-6;
        (
            "6.41441".into(),
            format_float(quotient),
            "5e-6".into(),
            pass,
        )
    }));
    lines.push(timed("same quotient below n/s = 7", || {
        (
            "< 7".into(),
            format_float(quotient),
            "strict".into(),
            quotient < 7.0,
        )
    }));

    for (n, s) in [(1u64, 2i64), (2, 4), (7, 1)] {
        let threshold = Q::from_u64(n) / Q::from_int(s);
        lines.push(timed(
            &format!("necessary bound n/s at n={n} s={s}"),
            || {
                let expected = if n == 7 { Q::from_int(7) } else { q(1, 2) };
                exact(&expected, &threshold)
            },
        ));
        let at = classify_zn_radial(n, &Q::from_int(s), &cx_real(threshold.clone())).verdict;
        let above =
            classify_zn_radial(n, &Q::from_int(s), &cx_real(threshold.clone() + q(1, 100))).verdict;
        if 2 * n as i64 <= s {
            lines.push(timed(&format!("z^{n} + C|z|^{s} at |C| = n/s"), || {
                status_line(Status::Hyponormal, at)
            }));
        }
        lines.push(timed(
            &format!("z^{n} + C|z|^{s} at |C| = n/s + 1/100"),
            || status_line(Status::NotHyponormal, above),
        ));
    }
    lines.push(timed("z^7 + 6.5|z| refuted below n/s", || {
        let v = classify_zn_radial_refined(7, &Q::from_int(1), &cx_real(q(13, 2)), &[32, 128], &[]);
        status_line(
            Status::NotHyponormal,
            v.map(|v| v.verdict).unwrap_or(Status::Inconclusive),
        )
    }));

    lines.push(timed("conjugate pair boundary bound, n=2 s=3", || {
        let mut u = vec![0.0; 5];
        u[0] = 1.0;
        u[4] = 1.0;
        let b = conjugate_bound_for_trial(2, 2, 3.0, 3.0, &u).unwrap_or(f64::NAN);
        (
            "1".into(),
            format_float(b),
            "1e-12".into(),
            (b - 1.0).abs() <= 1e-12,
        )
    }));
    lines.push(timed("conjugate pair at |a| = 1", || {
        let v = classify_conjugate_pair(
            2,
            &Q::from_int(3),
            &Complex::new(Q::from_int(0), Q::from_int(1)),
        );
        status_line(
            Status::Hyponormal,
            v.map(|v| v.verdict).unwrap_or(Status::Inconclusive),
        )
    }));

    lines.push(timed("asymptotic interval m=1 n=2 s=1 t=0", || {
        let got = asymptotic_interval(1, 2, Q::from_int(1), Q::from_int(0))
            .ok()
            .flatten();
        let text = got
            .as_ref()
            .map(|(lo, hi)| format!("({}, {})", format_rational(lo), format_rational(hi)))
            .unwrap_or_else(|| "none".into());
        let pass = got == Some((Q::from_int(2), Q::from_int(3)));
        ("(2, 3)".into(), text, "exact".into(), pass)
    }));

    lines.push(timed("leading coefficient m=2 s=(1,3) a1=-1", || {
        let p = alph_polynomial(
            2,
            &[Q::from_int(1), Q::from_int(3)],
            &[cx_real(Q::from_int(-1))],
        );
        let lead = p
            .ok()
            .and_then(|p| p.leading().cloned())
            .unwrap_or_else(|| Q::from_int(0));
        exact(&Q::from_int(-4), &lead)
    }));

    Report {
        lines,
        total_millis: ms(start.elapsed()),
    }
}
