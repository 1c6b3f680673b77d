//! Extremal problems over trial vectors: the quotient governing `z^n + C|z|^s`, its
//! pencil reduction, annuli of excluded `|a|` for the additive two-term family, and
//! Cauchy–Schwarz safe ranges for both two-term families.

mod annulus;
mod conjugate;
mod interval;
mod pencil;
mod quotient;
mod safe;

pub use annulus::{
    annulus_for_trial, asymptotic_interval, excluded_region, ExcludedRegion, TrialAnnulus,
};
pub use conjugate::conjugate_bound_for_trial;
pub use interval::{Interval, IntervalUnion};
pub use pencil::{pencil_infimum, RatioEstimate, RatioSide};
pub use quotient::{
    cinf_quotient, indicator_block, linear_block, quotient_parts, Quotient, QuotientValue,
};
pub use safe::{conjugate_small_bound, safe_interval_complement, SafeInterval};
