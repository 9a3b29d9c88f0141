//! Quotients of `f` (or `f′`) against its partial sums.
//!
//! Ratio kinds are evaluated on `f(z)/z` and `f_m(z)/z`, so both factors have
//! constant term 1 and every quotient equals 1 at the origin.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::HyperBesselParams;
use crate::series::{EvalConfig, Evaluation, Evaluator, Shape};

/// Denominators smaller than this are treated as zeros of `f`, `f_m`, `f′` or `f′_m`.
pub const POLE_THRESHOLD: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QuotientKind {
    /// `f / f_m`
    #[serde(rename = "F_over_Fm")]
    FOverFm,
    /// `f_m / f`
    #[serde(rename = "Fm_over_F")]
    FmOverF,
    /// `f′ / f′_m`
    #[serde(rename = "Fp_over_Fmp")]
    FpOverFmp,
    /// `f′_m / f′`
    #[serde(rename = "Fmp_over_Fp")]
    FmpOverFp,
}

impl QuotientKind {
    pub const ALL: [QuotientKind; 4] = [
        QuotientKind::FOverFm,
        QuotientKind::FmOverF,
        QuotientKind::FpOverFmp,
        QuotientKind::FmpOverFp,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            QuotientKind::FOverFm => "F_over_Fm",
            QuotientKind::FmOverF => "Fm_over_F",
            QuotientKind::FpOverFmp => "Fp_over_Fmp",
            QuotientKind::FmpOverFp => "Fmp_over_Fp",
        }
    }

    fn shape(self) -> Shape {
        match self {
            QuotientKind::FOverFm | QuotientKind::FmOverF => Shape::Reduced,
            QuotientKind::FpOverFmp | QuotientKind::FmpOverFp => Shape::Derivative,
        }
    }

    /// Whether the full series sits in the numerator.
    fn full_on_top(self) -> bool {
        matches!(self, QuotientKind::FOverFm | QuotientKind::FpOverFmp)
    }
}

impl fmt::Display for QuotientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for QuotientKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        QuotientKind::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::domain(format!("unknown quotient kind `{s}`")))
    }
}

impl Evaluator {
    /// Quotient value with a bound on the error inherited from truncation.
    pub fn quotient(&self, kind: QuotientKind, m: usize, z: Complex64) -> Result<Evaluation> {
        let shape = kind.shape();
        let full = self.eval(shape, z)?;
        let partial = self.partial(shape, m, z);
        let (num, den) = if kind.full_on_top() {
            (full.value, partial)
        } else {
            (partial, full.value)
        };
        let den_mod = den.norm();
        if den_mod < POLE_THRESHOLD {
            return Err(Error::Pole { z, modulus: den_mod });
        }
        let error_bound = if kind.full_on_top() {
            full.error_bound / den_mod
        } else if den_mod > full.error_bound {
            num.norm() * full.error_bound / (den_mod * (den_mod - full.error_bound))
        } else {
            f64::INFINITY
        };
        Ok(Evaluation {
            value: num / den,
            error_bound,
            order: full.order,
        })
    }
}

pub fn quotient(
    params: &HyperBesselParams,
    kind: QuotientKind,
    m: usize,
    z: Complex64,
    cfg: &EvalConfig,
) -> Result<Complex64> {
    Ok(Evaluator::new(params, cfg)?.quotient(kind, m, z)?.value)
}
