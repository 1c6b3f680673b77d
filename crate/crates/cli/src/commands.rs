//! One function per subcommand, each producing a [`Report`].

use std::collections::BTreeMap;
use std::path::Path;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use hyponorm::classifier::{classify_algebraic, classify_with, ClassifyOptions};
use hyponorm::commutator::min_eigen_certificate;
use hyponorm::extremal::{excluded_region, pencil_infimum};
use hyponorm::oracle::{gram_commutator_value, quad_inner_product};
use hyponorm::projection::project_monomial;
use hyponorm::reproduce::{reproduce, Report as Reproduction};
use hyponorm::scalar::{cx, cx_to_f64, format_float, format_rational, parse_rational};
use hyponorm::symbol::parse_symbol_with_param;
use hyponorm::{parse_symbol, RadialSymbol, Rational, Scalar, Source, Status, Verdict, Witness};

use crate::output::{csv_text, render, Report, Table};
use crate::{exit, CliError, CliResult, Command, Limits, OracleQuery, Outcome, RunConfig};

type Q = Rational;

/// Upper bound on scan grid points.
const MAX_GRID: usize = 250_000;

pub fn execute(config: &RunConfig) -> CliResult<Outcome> {
    let format = config.format();
    match &config.command {
        Command::Project { k, j, t } => render(&project(*k, *j, t)?, format),
        Command::Check { symbol, max_n, tol } => render(&check(symbol, *max_n, *tol)?, format),
        Command::Classify { symbol, limits } => render(&classify(symbol, limits)?, format),
        Command::Threshold { n, s, pencil_size } => {
            render(&threshold(*n, s, *pencil_size)?, format)
        }
        Command::Annuli {
            m,
            n,
            s,
            t,
            budget,
            csv,
        } => {
            let report = annuli(*m, *n, s, t, *budget)?;
            write_csv(csv.as_deref(), &report)?;
            render(&report, format)
        }
        Command::Algebraic { m, powers, coeffs } => render(&algebraic(*m, powers, coeffs)?, format),
        Command::Scan {
            template,
            re_range,
            im_range,
            step,
            csv,
            limits,
        } => {
            let report = scan(template, re_range, im_range, step, limits)?;
            write_csv(csv.as_deref(), &report)?;
            render(&report, format)
        }
        Command::Oracle { query } => render(&oracle(query)?, format),
        Command::Reproduce => render(&ReproduceReport(reproduce()), format),
    }
}

fn write_csv<R: Report>(path: Option<&Path>, report: &R) -> CliResult<()> {
    if let Some(path) = path {
        std::fs::write(path, csv_text(&report.table())?)?;
    }
    Ok(())
}

fn rational(name: &str, text: &str) -> CliResult<Q> {
    parse_rational(text)
        .ok_or_else(|| CliError::Argument(format!("{name}: `{text}` is not a decimal or p/q")))
}

fn complex(text: &str) -> CliResult<Complex<Q>> {
    parse_symbol(text)?
        .as_constant()
        .ok_or_else(|| CliError::Argument(format!("`{text}` is not a number")))
}

fn list<T>(text: &str, item: impl Fn(&str) -> CliResult<T>) -> CliResult<Vec<T>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|e| item(e.trim())).collect()
}

fn range(name: &str, text: &str) -> CliResult<(Q, Q)> {
    match list(text, |e| rational(name, e))?.as_slice() {
        [lo, hi] if lo <= hi => Ok((lo.clone(), hi.clone())),
        _ => Err(CliError::Argument(format!(
            "{name}: expected `lo,hi` with lo <= hi, got `{text}`"
        ))),
    }
}

/// Doubling from 32, ending exactly at `max`.
fn schedule(max: u64) -> Vec<usize> {
    let max = max as usize;
    let mut out: Vec<usize> = std::iter::successors(Some(32usize), |n| Some(n * 2))
        .take_while(|&n| n < max)
        .collect();
    out.push(max);
    out
}

fn options(limits: &Limits) -> ClassifyOptions {
    let defaults = ClassifyOptions::default();
    let max = limits.max_n as usize;
    ClassifyOptions {
        budget: limits.budget as usize,
        witness_schedule: defaults
            .witness_schedule
            .into_iter()
            .filter(|&n| n <= max)
            .collect(),
        fallback_schedule: schedule(limits.max_n),
        tol: limits.tol,
        ..defaults
    }
}

fn status_code(status: Status) -> u8 {
    match status {
        Status::Inconclusive => exit::INCONCLUSIVE,
        _ => exit::OK,
    }
}

// ---- project

#[derive(Debug, Serialize, Deserialize)]
pub struct ProjectReport {
    pub k: u64,
    pub j: u64,
    pub t: String,
    pub coefficient: String,
    pub degree: Option<u64>,
    pub projection: String,
}

fn project(k: u64, j: u64, t: &str) -> CliResult<ProjectReport> {
    let tq = rational("t", t)?;
    if tq < Q::from_int(0) {
        return Err(CliError::Argument(format!(
            "t must be nonnegative, got {t}"
        )));
    }
    let p = project_monomial(k, j, &tq);
    let (coefficient, degree, projection) = if p.is_zero() {
        ("0".to_string(), None, "0".to_string())
    } else {
        let c = format_rational(&p.coeff.re);
        let text = format!("({c})·z^{}", p.degree);
        (c, Some(p.degree), text)
    };
    Ok(ProjectReport {
        k,
        j,
        t: format_rational(&tq),
        coefficient,
        degree,
        projection,
    })
}

impl Report for ProjectReport {
    fn human(&self) -> String {
        self.projection.clone()
    }
    fn table(&self) -> Table {
        Table {
            header: vec!["k", "j", "t", "coefficient", "degree"],
            rows: vec![vec![
                self.k.to_string(),
                self.j.to_string(),
                self.t.clone(),
                self.coefficient.clone(),
                self.degree.map(|d| d.to_string()).unwrap_or_default(),
            ]],
        }
    }
}

// ---- check

#[derive(Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub symbol: String,
    pub verdict: Status,
    pub source: Source,
    pub witness: Option<Vec<String>>,
    pub value: Option<String>,
    pub truncation: Option<usize>,
    pub detail: String,
    pub parameters: BTreeMap<String, String>,
}

fn check(symbol: &str, max_n: u64, tol: f64) -> CliResult<CheckReport> {
    let phi = parse_symbol(symbol)?;
    let v = min_eigen_certificate(&phi, &schedule(max_n), tol);
    Ok(CheckReport {
        symbol: phi.to_string(),
        verdict: v.verdict,
        source: v.source,
        witness: v.witness.as_ref().map(|w| w.vector.clone()),
        value: v.witness.as_ref().map(|w| w.value.clone()),
        truncation: v.witness.as_ref().map(|w| w.truncation),
        detail: v.detail,
        parameters: v.parameters,
    })
}

impl Report for CheckReport {
    fn human(&self) -> String {
        let mut out = format!(
            "symbol: {}\nverdict: {}\nsource: {}\ndetail: {}\n",
            self.symbol, self.verdict, self.source, self.detail
        );
        for (k, v) in &self.parameters {
            out += &format!("  {k} = {v}\n");
        }
        if let (Some(w), Some(value), Some(n)) = (&self.witness, &self.value, self.truncation) {
            out += &format!("witness (N = {n}): [{}]\nvalue: {value}\n", w.join(", "));
        }
        out
    }
    fn table(&self) -> Table {
        Table {
            header: vec![
                "symbol",
                "verdict",
                "source",
                "value",
                "truncation",
                "witness",
            ],
            rows: vec![vec![
                self.symbol.clone(),
                self.verdict.to_string(),
                self.source.to_string(),
                self.value.clone().unwrap_or_default(),
                self.truncation.map(|n| n.to_string()).unwrap_or_default(),
                self.witness
                    .as_ref()
                    .map(|w| w.join(";"))
                    .unwrap_or_default(),
            ]],
        }
    }
    fn code(&self) -> u8 {
        status_code(self.verdict)
    }
}

// ---- classify / algebraic

#[derive(Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub detail: String,
    pub parameters: BTreeMap<String, String>,
    pub witness: Option<Witness>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VerdictReport {
    pub symbol: String,
    pub verdict: Status,
    pub source: Source,
    pub certificate: Certificate,
}

impl VerdictReport {
    fn new(phi: &RadialSymbol<Q>, v: Verdict) -> Self {
        Self {
            symbol: phi.to_string(),
            verdict: v.verdict,
            source: v.source,
            certificate: Certificate {
                detail: v.detail,
                parameters: v.parameters,
                witness: v.witness,
            },
        }
    }
}

impl Report for VerdictReport {
    fn human(&self) -> String {
        let c = &self.certificate;
        let mut out = format!(
            "symbol: {}\nverdict: {}\nsource: {}\ndetail: {}\n",
            self.symbol, self.verdict, self.source, c.detail
        );
        for (k, v) in &c.parameters {
            out += &format!("  {k} = {v}\n");
        }
        if let Some(w) = &c.witness {
            out += &format!(
                "witness (N = {}): [{}]\nvalue: {}\n",
                w.truncation,
                w.vector.join(", "),
                w.value
            );
        }
        out
    }
    fn table(&self) -> Table {
        let w = self.certificate.witness.as_ref();
        Table {
            header: vec!["symbol", "verdict", "source", "detail", "value", "witness"],
            rows: vec![vec![
                self.symbol.clone(),
                self.verdict.to_string(),
                self.source.to_string(),
                self.certificate.detail.clone(),
                w.map(|w| w.value.clone()).unwrap_or_default(),
                w.map(|w| w.vector.join(";")).unwrap_or_default(),
            ]],
        }
    }
    fn code(&self) -> u8 {
        status_code(self.verdict)
    }
}

fn classify(symbol: &str, limits: &Limits) -> CliResult<VerdictReport> {
    let phi = parse_symbol(symbol)?.normalize();
    Ok(VerdictReport::new(
        &phi,
        classify_with(&phi, &options(limits)),
    ))
}

fn algebraic(m: u64, powers: &str, coeffs: &str) -> CliResult<VerdictReport> {
    let exponents = list(powers, |e| rational("powers", e))?;
    let coeffs = list(coeffs, complex)?;
    if exponents.is_empty() || coeffs.len() + 1 != exponents.len() {
        return Err(CliError::Argument(format!(
            "need one more power than coefficients, got {} and {}",
            exponents.len(),
            coeffs.len()
        )));
    }
    let holo = u32::try_from(m).map_err(|_| CliError::Argument(format!("m = {m} is too large")))?;
    let one = cx(Q::from_int(1), Q::from_int(0));
    let mut phi = RadialSymbol::zero();
    for (a, s) in std::iter::once(&one).chain(&coeffs).zip(&exponents) {
        phi = phi.add(&RadialSymbol::monomial(a.clone(), holo, 0, s.clone())?);
    }
    let phi = phi.normalize();
    let v = classify_algebraic(m, &exponents, &coeffs)?;
    Ok(VerdictReport::new(&phi, v))
}

// ---- threshold

#[derive(Debug, Serialize, Deserialize)]
pub struct ThresholdReport {
    pub n: u64,
    pub s: String,
    /// `n/s`: larger `|C|` is never hyponormal.
    pub necessary_bound: String,
    /// Whether `|C| ≤ n/s` is also sufficient (`s ≥ 2n`).
    pub sufficient: bool,
    /// Quotient at the extremal vector of the truncated pencil; larger `|C|` is refuted.
    pub pencil_bound: String,
    pub pencil_eigen_estimate: String,
    pub pencil_size: usize,
}

fn threshold(n: u64, s: &str, pencil_size: u64) -> CliResult<ThresholdReport> {
    let sq = rational("s", s)?;
    if n == 0 || sq <= Q::from_int(0) {
        return Err(CliError::Argument("need n >= 1 and s > 0".into()));
    }
    let est = pencil_infimum(n, &sq.to_f64(), pencil_size as usize)?;
    Ok(ThresholdReport {
        n,
        s: format_rational(&sq),
        necessary_bound: format_rational(&(Q::from_u64(n) / sq.clone())),
        sufficient: sq >= Q::from_u64(2 * n),
        pencil_bound: format_float(est.value),
        pencil_eigen_estimate: format_float(est.eigen_estimate),
        pencil_size: est.truncation,
    })
}

impl Report for ThresholdReport {
    fn human(&self) -> String {
        format!(
            "z^{n} + C|z|^{s}\n\
             necessary: |C| <= n/s = {b}\n\
             sufficient at |C| <= n/s: {suff}\n\
             pencil bound (N = {size}): {p} (eigen estimate {e}); larger |C| is not hyponormal\n",
            n = self.n,
            s = self.s,
            b = self.necessary_bound,
            suff = if self.sufficient {
                "yes"
            } else {
                "no (needs s >= 2n)"
            },
            size = self.pencil_size,
            p = self.pencil_bound,
            e = self.pencil_eigen_estimate,
        )
    }
    fn table(&self) -> Table {
        Table {
            header: vec![
                "n",
                "s",
                "necessary_bound",
                "sufficient",
                "pencil_bound",
                "pencil_eigen_estimate",
                "pencil_size",
            ],
            rows: vec![vec![
                self.n.to_string(),
                self.s.clone(),
                self.necessary_bound.clone(),
                self.sufficient.to_string(),
                self.pencil_bound.clone(),
                self.pencil_eigen_estimate.clone(),
                self.pencil_size.to_string(),
            ]],
        }
    }
}

// ---- annuli

#[derive(Debug, Serialize, Deserialize)]
pub struct Span {
    pub lo: String,
    pub hi: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct AnnulusRow {
    pub lo: String,
    pub hi: String,
    pub trial: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct AnnuliReport {
    pub m: u64,
    pub n: u64,
    pub s: String,
    pub t: String,
    pub budget: u64,
    pub union: Vec<Span>,
    pub annuli: Vec<AnnulusRow>,
}

fn annuli(m: u64, n: u64, s: &str, t: &str, budget: u64) -> CliResult<AnnuliReport> {
    let (sq, tq) = (rational("s", s)?, rational("t", t)?);
    let region = excluded_region(m, n, sq.to_f64(), tq.to_f64(), budget as usize)?;
    let mut rows: Vec<_> = region.annuli.iter().collect();
    rows.sort_by(|a, b| {
        (a.interval.lo, a.interval.hi)
            .partial_cmp(&(b.interval.lo, b.interval.hi))
            .expect("finite endpoints")
            .then_with(|| a.trial.cmp(&b.trial))
    });
    Ok(AnnuliReport {
        m,
        n,
        s: format_rational(&sq),
        t: format_rational(&tq),
        budget,
        union: region
            .union
            .intervals()
            .iter()
            .map(|i| Span {
                lo: format_float(i.lo),
                hi: format_float(i.hi),
            })
            .collect(),
        annuli: rows
            .into_iter()
            .map(|a| AnnulusRow {
                lo: format_float(a.interval.lo),
                hi: format_float(a.interval.hi),
                trial: a.trial.clone(),
            })
            .collect(),
    })
}

impl Report for AnnuliReport {
    fn human(&self) -> String {
        let mut out = format!(
            "z^{}|z|^{} + a z^{}|z|^{}: {} certified annuli of non-hyponormal |a|\n",
            self.n,
            self.s,
            self.m,
            self.t,
            self.annuli.len()
        );
        if self.union.is_empty() {
            out += "union: empty\n";
        }
        for span in &self.union {
            out += &format!("union: ({}, {})\n", span.lo, span.hi);
        }
        out
    }
    fn table(&self) -> Table {
        Table {
            header: vec!["lo", "hi", "trial"],
            rows: self
                .annuli
                .iter()
                .map(|a| vec![a.lo.clone(), a.hi.clone(), a.trial.clone()])
                .collect(),
        }
    }
}

// ---- scan

#[derive(Debug, Serialize, Deserialize)]
pub struct ScanRow {
    pub re: String,
    pub im: String,
    pub status: Status,
    pub source: Source,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ScanReport {
    pub template: String,
    pub rows: Vec<ScanRow>,
}

fn grid(lo: &Q, hi: &Q, step: &Q) -> CliResult<Vec<Q>> {
    let count = ((hi.clone() - lo.clone()) / step.clone()).floor().to_f64() as usize + 1;
    if count > MAX_GRID {
        return Err(CliError::Argument(format!(
            "grid axis has {count} points; the limit is {MAX_GRID} in total"
        )));
    }
    Ok((0..count)
        .map(|i| lo.clone() + step.clone() * Q::from_u64(i as u64))
        .collect())
}

fn scan(
    template: &str,
    re_range: &str,
    im_range: &str,
    step: &str,
    limits: &Limits,
) -> CliResult<ScanReport> {
    let (re_lo, re_hi) = range("re-range", re_range)?;
    let (im_lo, im_hi) = range("im-range", im_range)?;
    let step = rational("step", step)?;
    if step <= Q::from_int(0) {
        return Err(CliError::Argument("step must be positive".into()));
    }
    parse_symbol_with_param(template, "a", cx(re_lo.clone(), im_lo.clone()))?;
    let res = grid(&re_lo, &re_hi, &step)?;
    let ims = grid(&im_lo, &im_hi, &step)?;
    if res.len() * ims.len() > MAX_GRID {
        return Err(CliError::Argument(format!(
            "grid has {} points; the limit is {MAX_GRID}",
            res.len() * ims.len()
        )));
    }
    let points: Vec<(Q, Q)> = res
        .iter()
        .flat_map(|re| ims.iter().map(move |im| (re.clone(), im.clone())))
        .collect();
    let opts = options(limits);
    let verdicts = hyponorm::par::map(points.clone(), |(re, im)| {
        parse_symbol_with_param(template, "a", cx(re, im)).map(|phi| classify_with(&phi, &opts))
    });
    let mut rows = Vec::with_capacity(points.len());
    for ((re, im), v) in points.into_iter().zip(verdicts) {
        let v = v?;
        rows.push((re, im, v.verdict, v.source));
    }
    rows.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
    Ok(ScanReport {
        template: template.to_string(),
        rows: rows
            .into_iter()
            .map(|(re, im, status, source)| ScanRow {
                re: format_float(re.to_f64()),
                im: format_float(im.to_f64()),
                status,
                source,
            })
            .collect(),
    })
}

impl Report for ScanReport {
    fn human(&self) -> String {
        let mut out = format!("template: {}\n", self.template);
        for r in &self.rows {
            out += &format!("a = {} + {}i: {} ({})\n", r.re, r.im, r.status, r.source);
        }
        out
    }
    fn table(&self) -> Table {
        Table {
            header: vec!["re", "im", "status", "source"],
            rows: self
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.re.clone(),
                        r.im.clone(),
                        r.status.to_string(),
                        r.source.to_string(),
                    ]
                })
                .collect(),
        }
    }
}

// ---- oracle

#[derive(Debug, Serialize, Deserialize)]
pub struct OracleReport {
    pub query: String,
    pub value: String,
}

fn oracle(query: &OracleQuery) -> CliResult<OracleReport> {
    match query {
        OracleQuery::Inner { a, b, s, c, d, t } => Ok(OracleReport {
            query: format!("<z^{a} zbar^{b} r^{s}, z^{c} zbar^{d} r^{t}>"),
            value: format_float(quad_inner_product(*a, *b, *s, *c, *d, *t)?),
        }),
        OracleQuery::Gram { symbol, vector } => {
            let phi = parse_symbol(symbol)?;
            let u: Vec<_> = list(vector, complex)?.iter().map(cx_to_f64).collect();
            Ok(OracleReport {
                query: format!("<[T*,T]u, u> for {phi}"),
                value: format_float(gram_commutator_value(&phi, &u)?),
            })
        }
    }
}

impl Report for OracleReport {
    fn human(&self) -> String {
        format!("{} = {}", self.query, self.value)
    }
    fn table(&self) -> Table {
        Table {
            header: vec!["query", "value"],
            rows: vec![vec![self.query.clone(), self.value.clone()]],
        }
    }
}

// ---- reproduce

#[derive(Serialize)]
#[serde(transparent)]
struct ReproduceReport(Reproduction);

impl Report for ReproduceReport {
    fn human(&self) -> String {
        let mut out: String = self.0.lines.iter().map(|l| format!("{l}\n")).collect();
        let failed = self.0.lines.iter().filter(|l| !l.pass).count();
        out += &format!(
            "{} lines, {failed} failed, total {:.1} ms\n",
            self.0.lines.len(),
            self.0.total_millis
        );
        out
    }
    fn table(&self) -> Table {
        Table {
            header: vec![
                "name",
                "expected",
                "computed",
                "tolerance",
                "pass",
                "millis",
            ],
            rows: self
                .0
                .lines
                .iter()
                .map(|l| {
                    vec![
                        l.name.clone(),
                        l.expected.clone(),
                        l.computed.clone(),
                        l.tolerance.clone(),
                        l.pass.to_string(),
                        format!("{:.1}", l.millis),
                    ]
                })
                .collect(),
        }
    }
    fn code(&self) -> u8 {
        if self.0.all_pass() {
            exit::OK
        } else {
            exit::MISMATCH
        }
    }
}
