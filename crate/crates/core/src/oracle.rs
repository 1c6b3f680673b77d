//! Brute-force cross-checks: inner products by radial quadrature and the commutator
//! form assembled from them, with no use of the closed-form projection.
//!
//! The angular integral is done by index matching; only `∫₀¹ r^q dr` is numerical.

use std::collections::BTreeMap;
use std::num::NonZeroUsize;
use std::sync::{Arc, Mutex, OnceLock};

use gauss_quad::GaussLegendre;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::symbol::RadialSymbol;

/// Gauss–Legendre on `[0, 1]`, doubled from `initial_nodes` until two successive
/// values agree to `tol`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    pub initial_nodes: usize,
    pub max_nodes: usize,
    pub tol: f64,
}

impl Default for QuadratureRule {
    fn default() -> Self {
        Self {
            initial_nodes: 64,
            max_nodes: 8192,
            tol: 1e-13,
        }
    }
}

fn cached_rule(nodes: usize) -> Arc<GaussLegendre> {
    static RULES: OnceLock<Mutex<BTreeMap<usize, Arc<GaussLegendre>>>> = OnceLock::new();
    let mut rules = RULES
        .get_or_init(Default::default)
        .lock()
        .unwrap_or_else(|e| e.into_inner());
    rules
        .entry(nodes)
        .or_insert_with(|| {
            Arc::new(GaussLegendre::new(
                NonZeroUsize::new(nodes.max(1)).expect("positive"),
            ))
        })
        .clone()
}

impl QuadratureRule {
    /// Highest polynomial degree integrated exactly by the largest rule.
    pub fn capacity(&self) -> f64 {
        (2 * self.max_nodes - 1) as f64
    }

    /// Number of radial nodes on which the angular integral is analytic; always 0.
    pub fn angular_nodes(&self) -> usize {
        0
    }

    /// `∫₀¹ r^q dr` for `q ≥ 0`.
    pub fn integrate_power(&self, q: f64) -> Result<f64> {
        if !(q >= 0.0) || q > self.capacity() {
            return Err(Error::DegreeOverflow {
                exponent: q,
                capacity: self.capacity(),
            });
        }
        let f = |r: f64| r.powf(q);
        let mut nodes = self.initial_nodes.max(1);
        let mut prev = cached_rule(nodes).integrate(0.0, 1.0, f);
        while nodes < self.max_nodes {
            nodes *= 2;
            let next = cached_rule(nodes).integrate(0.0, 1.0, f);
            if (next - prev).abs() <= self.tol {
                return Ok(next);
            }
            prev = next;
        }
        Err(Error::Precondition(format!(
            "radial quadrature of r^{q} did not settle at {nodes} nodes"
        )))
    }

    /// `⟨z^a z̄^b |z|^s, z^c z̄^d |z|^t⟩` under normalized area measure.
    #[allow(clippy::too_many_arguments)]
    pub fn inner_product(&self, a: u64, b: u64, s: f64, c: u64, d: u64, t: f64) -> Result<f64> {
        if a + d != b + c {
            return Ok(0.0);
        }
        let q = (a + b + c + d) as f64 + s + t + 1.0;
        Ok(2.0 * self.integrate_power(q)?)
    }
}

/// [`QuadratureRule::inner_product`] under the default rule.
pub fn quad_inner_product(a: u64, b: u64, s: f64, c: u64, d: u64, t: f64) -> Result<f64> {
    QuadratureRule::default().inner_product(a, b, s, c, d, t)
}

/// `‖P(φu)‖²` with every coefficient obtained from quadrature inner products.
fn projected_norm_sq(
    rule: &QuadratureRule,
    phi: &RadialSymbol<f64>,
    u: &[Complex64],
) -> Result<f64> {
    let mut image: BTreeMap<u64, Complex64> = BTreeMap::new();
    for term in phi.terms() {
        let (m, n, s) = (
            u64::from(term.holo()),
            u64::from(term.anti()),
            *term.radial(),
        );
        for (k, uk) in u.iter().enumerate() {
            if *uk == Complex64::new(0.0, 0.0) || m + (k as u64) < n {
                continue;
            }
            let l = m + k as u64 - n;
            let overlap = rule.inner_product(m + k as u64, n, s, l, 0, 0.0)?;
            let norm = rule.inner_product(l, 0, 0.0, l, 0, 0.0)?;
            *image.entry(l).or_default() += term.coeff() * uk * (overlap / norm);
        }
    }
    image.iter().try_fold(0.0, |acc, (&l, c)| {
        Ok(acc + c.norm_sqr() * rule.inner_product(l, 0, 0.0, l, 0, 0.0)?)
    })
}

/// `‖T_φ u‖² − ‖T_φ̄ u‖²` for `u = Σ u_k z^k`.
pub fn gram_commutator_value<T: Scalar>(phi: &RadialSymbol<T>, u: &[Complex64]) -> Result<f64> {
    let rule = QuadratureRule::default();
    let phi = phi.to_f64();
    Ok(projected_norm_sq(&rule, &phi, u)? - projected_norm_sq(&rule, &phi.conjugate(), u)?)
}
