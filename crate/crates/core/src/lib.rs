//! Normalized hyper-Bessel functions on the unit disk.
//!
//! The normalized hyper-Bessel function of dimension `d` with parameters
//! `α_1..α_d` is
//!
//! ```text
//! f(z) = Σ_{n≥0} A_n z^{n(d+1)+1},
//! A_n  = (−1)^n / (n! (d+1)^{n(d+1)} ∏_i (α_i+1)_n)
//! ```
//!
//! This crate evaluates `f`, `f′`, their partial sums and the four
//! function/partial-sum quotients with certified truncation error
//! ([`series`], [`quotient`]), computes the real-part lower bounds for those
//! quotients together with their parameter gates ([`bounds`]), and checks
//! each bound numerically over a sampled sub-disk ([`verify`]).
//!
//! ```
//! use hybess::{make_params, series, EvalConfig};
//! use num_complex::Complex64;
//!
//! // d = 1, α = 1/2 reduces to sin z.
//! let p = make_params(1, &[0.5]).unwrap();
//! let v = series::eval_f(&p, Complex64::new(1.0, 0.0), &EvalConfig::default()).unwrap();
//! assert!((v.re - 1f64.sin()).abs() < 1e-13);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod closed_form;
pub mod coeffs;
pub mod error;
pub mod params;
pub mod quotient;
pub mod series;
pub mod sum;
pub mod verify;

pub use coeffs::{coefficient_direct, coefficient_table, tail_bound, CoefficientTable};
pub use error::{Error, Result};
pub use params::{make_params, ComplexPoint, HyperBesselParams};
pub use quotient::{quotient, QuotientKind};
pub use series::EvalConfig;
