//! Closed-form verdicts for the symbol families with known criteria, and a dispatcher
//! that falls back to numerical certificates.

mod algebraic;
mod delta;
mod dispatch;
mod families;
mod ray;

pub use algebraic::{alph_gap, alph_polynomial, classify_algebraic};
pub use delta::{check_delta_prime_positive, DeltaPrimeSign};
pub use dispatch::{classify, classify_text, classify_with};
pub use families::{
    classify_additive, classify_conjugate_family, classify_conjugate_pair,
    classify_pure_radial_power, classify_zn_radial, classify_zn_radial_refined, exists_breaking_s,
    ClassifyOptions,
};
pub use ray::{check_positivity_on_ray, RayPositivity, RealPolynomial};
