//! Bergman projections and inner products of radial monomials.
//!
//! With normalized area measure,
//! `⟨z^a z̄^b |z|^s, z^c z̄^d |z|^t⟩ = 2 / (2(a+d) + s + t + 2)` when `a + d = b + c`
//! and zero otherwise, and `P(z^k z̄^j |z|^t) = 2(k−j+1)/(2k+t+2) · z^{k−j}` for
//! `j ≤ k` (zero for `j > k`).

use num_complex::Complex;

use crate::scalar::{cx_is_zero, cx_real, Scalar};
use crate::symbol::RadialSymbol;

/// `coeff · z^degree`; a zero coefficient is the zero projection.
#[derive(Clone, Debug, PartialEq)]
pub struct ScaledMonomial<T> {
    pub coeff: Complex<T>,
    pub degree: u64,
}

impl<T: Scalar> ScaledMonomial<T> {
    pub fn zero() -> Self {
        Self {
            coeff: cx_real(T::zero()),
            degree: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        cx_is_zero(&self.coeff)
    }
}

pub fn monomial_inner_product<T: Scalar>(a: u64, b: u64, s: &T, c: u64, d: u64, t: &T) -> T {
    if a + d != b + c {
        return T::zero();
    }
    let denom = T::from_u64(2 * (a + d) + 2) + s.clone() + t.clone();
    T::from_int(2) / denom
}

/// `‖z^k‖² = 1/(k+1)`.
pub fn monomial_norm_sq<T: Scalar>(k: u64) -> T {
    T::one() / T::from_u64(k + 1)
}

/// Real factor of `P(z^k z̄^j |z|^t)`, `None` when the projection vanishes.
pub fn projection_factor<T: Scalar>(k: u64, j: u64, t: &T) -> Option<T> {
    if j > k {
        return None;
    }
    Some(T::from_u64(2 * (k - j + 1)) / (T::from_u64(2 * k + 2) + t.clone()))
}

pub fn project_monomial<T: Scalar>(k: u64, j: u64, t: &T) -> ScaledMonomial<T> {
    match projection_factor(k, j, t) {
        Some(f) => ScaledMonomial {
            coeff: cx_real(f),
            degree: k - j,
        },
        None => ScaledMonomial::zero(),
    }
}

/// `T_φ z^k`, one scaled monomial per surviving symbol term (terms of φ whose
/// antiholomorphic power exceeds `holo + k` vanish).
pub fn toeplitz_apply<T: Scalar>(phi: &RadialSymbol<T>, k: u64) -> Vec<ScaledMonomial<T>> {
    phi.terms()
        .iter()
        .filter_map(|m| {
            let holo = u64::from(m.holo()) + k;
            let f = projection_factor(holo, u64::from(m.anti()), m.radial())?;
            Some(ScaledMonomial {
                coeff: m.coeff().clone() * cx_real(f),
                degree: holo - u64::from(m.anti()),
            })
        })
        .collect()
}

/// Merges scaled monomials of equal degree, dropping zeros; sorted by degree.
pub fn merge_by_degree<T: Scalar>(
    items: impl IntoIterator<Item = ScaledMonomial<T>>,
) -> Vec<ScaledMonomial<T>> {
    let mut out: Vec<ScaledMonomial<T>> = Vec::new();
    for item in items {
        match out.iter_mut().find(|o| o.degree == item.degree) {
            Some(o) => o.coeff = o.coeff.clone() + item.coeff,
            None => out.push(item),
        }
    }
    out.retain(|o| !o.coeff.re.is_zero() || !o.coeff.im.is_zero());
    out.sort_by_key(|o| o.degree);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use crate::symbol::parse_symbol;

    type Q = Rational;

    fn q(p: i64, d: i64) -> Q {
        Q::ratio(p, d)
    }

    #[test]
    fn inner_product_examples() {
        let zero = Q::from_int(0);
        assert_eq!(monomial_inner_product(1, 0, &zero, 1, 0, &zero), q(1, 2));
        assert_eq!(monomial_inner_product(1, 0, &zero, 2, 0, &zero), q(0, 1));
        assert_eq!(monomial_inner_product(2, 1, &q(1, 1), 1, 0, &zero), q(2, 7));
    }

    #[test]
    fn projection_examples() {
        assert_eq!(
            project_monomial(1, 0, &q(2, 1)),
            ScaledMonomial {
                coeff: cx_real(q(2, 3)),
                degree: 1
            }
        );
        assert!(project_monomial(0, 1, &q(0, 1)).is_zero());
        assert_eq!(
            project_monomial(3, 1, &q(0, 1)),
            ScaledMonomial {
                coeff: cx_real(q(3, 4)),
                degree: 2
            }
        );
    }

    #[test]
    fn projection_is_normalized_inner_product() {
        for t in [q(0, 1), q(1, 2), q(1, 1), q(5, 2)] {
            for k in 0..=50u64 {
                for j in 0..=k {
                    let p = project_monomial(k, j, &t);
                    let ip = monomial_inner_product(k, j, &t, k - j, 0, &Q::from_int(0));
                    assert_eq!(p.coeff.re, ip / monomial_norm_sq::<Q>(k - j));
                }
            }
        }
    }

    #[test]
    fn unweighted_projection_matches_classical_formula() {
        for m in 0..20u64 {
            for n in 0..=m {
                let p = project_monomial(m, n, &Q::from_int(0));
                assert_eq!(p.coeff.re, q((m - n + 1) as i64, (m + 1) as i64));
            }
        }
    }

    #[test]
    fn apply_examples() {
        let s = q(3, 2);
        let radial = RadialSymbol::monomial(cx_real(Q::from_int(1)), 0, 0, s.clone()).unwrap();
        for k in 0..10u64 {
            let out = toeplitz_apply(&radial, k);
            assert_eq!(out.len(), 1);
            assert_eq!(out[0].degree, k);
            assert_eq!(
                out[0].coeff.re,
                Q::from_u64(2 * (k + 1)) / (Q::from_u64(2 * k + 2) + s.clone())
            );
        }

        let zbar2 = parse_symbol("zbar^2").unwrap();
        assert!(toeplitz_apply(&zbar2, 1).is_empty());

        let phi = parse_symbol("z + r^2").unwrap();
        let out = merge_by_degree(toeplitz_apply(&phi, 0));
        assert_eq!(
            out,
            vec![
                ScaledMonomial {
                    coeff: cx_real(q(1, 2)),
                    degree: 0
                },
                ScaledMonomial {
                    coeff: cx_real(q(1, 1)),
                    degree: 1
                },
            ]
        );
    }

    #[test]
    fn apply_is_linear() {
        let a = parse_symbol("z^2*r + (1+2i)*zbar").unwrap();
        let b = parse_symbol("3*r^(1/2) - z^2*r + zbar^3").unwrap();
        let sum = a.add(&b);
        for k in 0..12 {
            let lhs = merge_by_degree(toeplitz_apply(&sum, k));
            let rhs = merge_by_degree(
                toeplitz_apply(&a, k)
                    .into_iter()
                    .chain(toeplitz_apply(&b, k)),
            );
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn unnormalized_symbol_gives_same_column() {
        let raw = RadialSymbol::new(vec![
            crate::symbol::Monomial::new(cx_real(q(1, 1)), 3, 1, q(1, 2)).unwrap(),
            crate::symbol::Monomial::new(cx_real(q(2, 1)), 0, 2, q(0, 1)).unwrap(),
        ]);
        let norm = raw.normalize();
        for k in 0..8 {
            assert_eq!(
                merge_by_degree(toeplitz_apply(&raw, k)),
                merge_by_degree(toeplitz_apply(&norm, k))
            );
        }
    }
}
