use std::cmp::Ordering;
use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::bounds::{Functional, ModulusKind};
use crate::error::{Error, Result};
use crate::params::HyperBesselParams;
use crate::series::{EvalConfig, Evaluator, Shape};

use super::sampling::{refine_points, sample_disk, SamplingConfig};

/// Value of a functional at one point with its certified error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointValue {
    pub z: Complex64,
    pub value: f64,
    pub error_bound: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Extremum {
    /// Minimum of `Re(quotient)` or maximum of the modulus.
    pub value: f64,
    pub witness: Complex64,
    /// Certified evaluation error at the witness.
    pub error_bound: f64,
    pub samples_used: usize,
    /// Points dropped because a denominator vanished there.
    pub excluded: Vec<Complex64>,
}

/// Evaluates a [`Functional`] pointwise.
#[derive(Debug, Clone)]
pub struct FunctionalEvaluator {
    evaluator: Evaluator,
    functional: Functional,
}

impl FunctionalEvaluator {
    pub fn new(functional: Functional, params: &HyperBesselParams, eval_cfg: &EvalConfig) -> Result<Self> {
        Ok(FunctionalEvaluator {
            evaluator: Evaluator::new(params, eval_cfg)?,
            functional,
        })
    }

    pub fn functional(&self) -> Functional {
        self.functional
    }

    pub fn at(&self, z: Complex64) -> Result<PointValue> {
        let (value, error_bound) = match self.functional {
            Functional::Ratio { kind, m } => {
                let q = self.evaluator.quotient(kind, m, z)?;
                (q.value.re, q.error_bound)
            }
            Functional::Modulus { kind } => {
                let shape = match kind {
                    ModulusKind::ModulusF => Shape::Value,
                    ModulusKind::ModulusFPrime => Shape::Derivative,
                };
                let e = self.evaluator.eval(shape, z)?;
                (e.value.norm(), e.error_bound)
            }
        };
        Ok(PointValue { z, value, error_bound })
    }

    /// Central-difference gradient norm of the functional at `z`.
    pub fn gradient_norm(&self, z: Complex64, h: f64) -> f64 {
        let diff = |dz: Complex64| -> Option<f64> {
            let plus = self.at(z + dz).ok()?.value;
            let minus = self.at(z - dz).ok()?.value;
            Some((plus - minus) / (2.0 * h))
        };
        match (diff(Complex64::new(h, 0.0)), diff(Complex64::new(0.0, h))) {
            (Some(gx), Some(gy)) => gx.hypot(gy),
            _ => 0.0,
        }
    }
}

fn arg_unit(z: Complex64) -> f64 {
    let a = z.im.atan2(z.re);
    if a < 0.0 {
        a + TAU
    } else {
        a
    }
}

/// Total order used to pick the witness: better value first, then smaller
/// `|z|`, then smaller argument in `[0, 2π)`.
fn better(a: &PointValue, b: &PointValue, minimize: bool) -> bool {
    let by_value = if minimize {
        a.value.partial_cmp(&b.value)
    } else {
        b.value.partial_cmp(&a.value)
    };
    match by_value {
        Some(Ordering::Less) => true,
        Some(Ordering::Greater) => false,
        _ => match a.z.norm().partial_cmp(&b.z.norm()) {
            Some(Ordering::Less) => true,
            Some(Ordering::Greater) => false,
            _ => arg_unit(a.z) < arg_unit(b.z),
        },
    }
}

#[cfg(feature = "parallel")]
fn evaluate_all(fe: &FunctionalEvaluator, points: &[Complex64]) -> Vec<Result<PointValue>> {
    use rayon::prelude::*;
    points.par_iter().map(|&z| fe.at(z)).collect()
}

#[cfg(not(feature = "parallel"))]
fn evaluate_all(fe: &FunctionalEvaluator, points: &[Complex64]) -> Vec<Result<PointValue>> {
    points.iter().map(|&z| fe.at(z)).collect()
}

struct Accumulator {
    minimize: bool,
    best: Option<PointValue>,
    samples: usize,
    excluded: Vec<Complex64>,
}

impl Accumulator {
    /// Sequential merge in input order, so the result does not depend on how
    /// the evaluation was split across threads.
    fn merge(&mut self, results: Vec<Result<PointValue>>) -> Result<()> {
        for r in results {
            self.samples += 1;
            match r {
                Ok(pv) if pv.value.is_nan() => {
                    return Err(Error::domain(format!("functional is NaN at {}", pv.z)))
                }
                Ok(pv) => {
                    if self.best.as_ref().is_none_or(|b| better(&pv, b, self.minimize)) {
                        self.best = Some(pv);
                    }
                }
                Err(Error::Pole { z, .. }) => self.excluded.push(z),
                Err(e) => return Err(e),
            }
        }
        Ok(())
    }
}

/// Minimum of `Re(quotient)` (ratio kinds) or maximum of `|f|`, `|f′|`
/// (modulus kinds) over the sampled disk, with local refinement.
pub fn estimate_extremum(
    functional: Functional,
    params: &HyperBesselParams,
    cfg: &SamplingConfig,
    eval_cfg: &EvalConfig,
) -> Result<Extremum> {
    cfg.validate()?;
    let fe = FunctionalEvaluator::new(functional, params, eval_cfg)?;
    estimate_with(&fe, cfg)
}

pub(crate) fn estimate_with(fe: &FunctionalEvaluator, cfg: &SamplingConfig) -> Result<Extremum> {
    let mut acc = Accumulator {
        minimize: fe.functional().is_lower_bound(),
        best: None,
        samples: 0,
        excluded: Vec::new(),
    };
    let coarse = sample_disk(cfg);
    acc.merge(evaluate_all(fe, &coarse))?;

    let mut scale = 1.0;
    for _ in 0..cfg.refine_levels {
        let Some(center) = acc.best.map(|b| b.z) else { break };
        let (dr, dth) = cfg.cell_at(center.norm());
        let pts = refine_points(center, (dr * scale, dth * scale), cfg.refine_factor, cfg.max_radius);
        acc.merge(evaluate_all(fe, &pts))?;
        scale /= cfg.refine_factor as f64;
    }

    let best = acc
        .best
        .ok_or_else(|| Error::domain("every sampled point was excluded"))?;
    Ok(Extremum {
        value: best.value,
        witness: best.z,
        error_bound: best.error_bound,
        samples_used: acc.samples,
        excluded: acc.excluded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::make_params;
    use crate::quotient::QuotientKind;

    fn small_cfg() -> SamplingConfig {
        SamplingConfig {
            radii: 16,
            angles: 64,
            ..SamplingConfig::default()
        }
    }

    #[test]
    fn sinc_minimum_on_positive_real_axis() {
        let p = make_params(1, &[0.5]).unwrap();
        let f = Functional::Ratio { kind: QuotientKind::FOverFm, m: 0 };
        let ext = estimate_extremum(f, &p, &small_cfg(), &EvalConfig::default()).unwrap();
        let r = 0.999f64;
        assert!((ext.value - r.sin() / r).abs() < 1e-12);
        assert_eq!(ext.witness, Complex64::new(r, 0.0));
    }

    #[test]
    fn reciprocal_minimum_on_imaginary_axis() {
        let p = make_params(1, &[0.5]).unwrap();
        let f = Functional::Ratio { kind: QuotientKind::FmOverF, m: 0 };
        let ext = estimate_extremum(f, &p, &small_cfg(), &EvalConfig::default()).unwrap();
        let y = 0.999f64;
        assert!((ext.value - y / y.sinh()).abs() < 1e-12);
        assert_eq!(ext.witness, Complex64::new(0.0, y));
    }

    #[test]
    fn modulus_maximum() {
        let p = make_params(1, &[0.5]).unwrap();
        let f = Functional::Modulus { kind: ModulusKind::ModulusF };
        let ext = estimate_extremum(f, &p, &small_cfg(), &EvalConfig::default()).unwrap();
        assert!((ext.value - 0.999f64.sinh()).abs() < 1e-12);
        assert_eq!(ext.witness, Complex64::new(0.0, 0.999));
    }

    #[test]
    fn refinement_never_raises_infimum() {
        let p = make_params(2, &[0.3, 0.9]).unwrap();
        let f = Functional::Ratio { kind: QuotientKind::FmpOverFp, m: 1 };
        let mut prev = f64::INFINITY;
        for levels in 0..4 {
            let cfg = SamplingConfig {
                radii: 8,
                angles: 16,
                refine_levels: levels,
                refine_factor: 3,
                ..SamplingConfig::default()
            };
            let ext = estimate_extremum(f, &p, &cfg, &EvalConfig::default()).unwrap();
            assert!(ext.value <= prev);
            prev = ext.value;
        }
    }

    #[test]
    fn tie_break_prefers_small_argument() {
        let a = PointValue { z: Complex64::new(0.0, -0.5), value: 1.0, error_bound: 0.0 };
        let b = PointValue { z: Complex64::new(0.0, 0.5), value: 1.0, error_bound: 0.0 };
        assert!(better(&b, &a, true));
        assert!(!better(&a, &b, true));
    }
}
