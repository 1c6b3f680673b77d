//! Hyponormality of Toeplitz operators on the Bergman space of the unit disk with
//! symbols built from radial monomials `a·z^m·z̄^n·|z|^s`.
//!
//! The crate offers closed-form projections, the exact truncated self-commutator
//! form, the weight sequences and extremal problems attached to two-term symbol
//! families, a criterion dispatcher returning certified verdicts, and an independent
//! quadrature oracle used for cross-validation.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod classifier;
pub mod commutator;
pub mod error;
pub mod extremal;
pub mod linalg;
pub mod oracle;
pub mod par;
pub mod poly;
pub mod projection;
pub mod reproduce;
pub mod scalar;
pub mod symbol;
pub mod verdict;

pub use error::{Error, Result};
pub use scalar::{Rational, Scalar, Value};
pub use symbol::{parse_symbol, Monomial, RadialSymbol};
pub use verdict::{Source, Status, Verdict, Witness};
