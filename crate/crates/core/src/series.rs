//! Certified evaluation of `f`, `f′`, `f/z` and their partial sums.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::coeffs::{
    coefficient_ratio, derivative_tail_bound, reduced_tail_bound, CoefficientTable,
};
use crate::error::{Error, Result};
use crate::params::HyperBesselParams;
use crate::sum::ComplexSum;

/// Truncation policy for the infinite series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EvalConfig {
    /// Absolute error target for every series value.
    pub target_tol: f64,
    /// Largest truncation order the evaluator may use.
    pub max_terms: usize,
    /// Below this radius the closed forms switch to their Maclaurin series.
    pub small_z_threshold: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            target_tol: 1e-13,
            max_terms: 200,
            small_z_threshold: 0.1,
        }
    }
}

impl EvalConfig {
    pub fn with_tol(target_tol: f64) -> Self {
        EvalConfig {
            target_tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.target_tol > 0.0) {
            return Err(Error::domain("targetTol must be positive"));
        }
        if self.max_terms < 2 {
            return Err(Error::domain("maxTerms must be at least 2"));
        }
        if !(self.small_z_threshold > 0.0 && self.small_z_threshold < 1.0) {
            return Err(Error::domain("smallZThreshold must lie in (0, 1)"));
        }
        Ok(())
    }
}

/// Which series is being summed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Shape {
    /// `f(z) = Σ A_n z^(n(d+1)+1)`
    Value,
    /// `f′(z) = Σ (n(d+1)+1) A_n z^(n(d+1))`
    Derivative,
    /// `f(z)/z = Σ A_n z^(n(d+1))`
    Reduced,
}

/// A series value with its certified truncation error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    pub error_bound: f64,
    /// Index of the last summed coefficient.
    pub order: usize,
}

/// Hard cap on stored coefficients; they underflow long before this.
const TABLE_CAP: usize = 10_000;

/// Coefficients computed once and reused across many points.
#[derive(Debug, Clone)]
pub struct Evaluator {
    params: HyperBesselParams,
    cfg: EvalConfig,
    coeffs: Vec<f64>,
}

impl Evaluator {
    pub fn new(params: &HyperBesselParams, cfg: &EvalConfig) -> Result<Self> {
        cfg.validate()?;
        let mut coeffs = vec![1.0];
        let mut n = 0;
        while n < TABLE_CAP {
            let next = -coeffs[n] * coefficient_ratio(params, n);
            if !next.is_finite() {
                return Err(Error::Overflow { index: n + 1 });
            }
            coeffs.push(next);
            n += 1;
            if next == 0.0 && n > cfg.max_terms {
                break;
            }
        }
        Ok(Evaluator {
            params: params.clone(),
            cfg: *cfg,
            coeffs,
        })
    }

    pub fn from_table(table: &CoefficientTable, cfg: &EvalConfig) -> Result<Self> {
        Self::new(table.params(), cfg)
    }

    pub fn params(&self) -> &HyperBesselParams {
        &self.params
    }

    pub fn config(&self) -> &EvalConfig {
        &self.cfg
    }

    fn weight(&self, shape: Shape, n: usize) -> f64 {
        match shape {
            Shape::Derivative => (n * self.params.step() + 1) as f64,
            Shape::Value | Shape::Reduced => 1.0,
        }
    }

    /// Tail bound from the coefficient ratio, which decreases in `n`.
    fn ratio_tail(&self, shape: Shape, order: usize, r: f64) -> f64 {
        let s = self.params.step() as i32;
        let first = order + 1;
        let rs = r.powi(s);
        let lead = self.weight(shape, first) * self.coeffs[first].abs() * rs.powi(first as i32);
        if lead == 0.0 {
            return 0.0;
        }
        let growth = self.weight(shape, first + 1) / self.weight(shape, first);
        let t = coefficient_ratio(&self.params, first) * growth * rs;
        if t >= 1.0 {
            return f64::INFINITY;
        }
        lead / (1.0 - t)
    }

    /// Rigorous bound on the tail beyond `order` at radius `r`.
    pub fn tail(&self, shape: Shape, order: usize, r: f64) -> f64 {
        let geometric = match shape {
            Shape::Derivative => derivative_tail_bound(&self.params, order, r),
            Shape::Value | Shape::Reduced => reduced_tail_bound(&self.params, order, r),
        }
        .unwrap_or(f64::INFINITY);
        let bound = geometric.min(self.ratio_tail(shape, order, r));
        match shape {
            Shape::Value => r * bound,
            _ => bound,
        }
    }

    /// Smallest order whose tail bound meets the target tolerance.
    pub fn truncation_order(&self, shape: Shape, r: f64) -> Result<(usize, f64)> {
        let limit = self.cfg.max_terms.min(self.coeffs.len() - 2);
        let mut bound = f64::INFINITY;
        for order in 0..=limit {
            bound = self.tail(shape, order, r);
            if bound <= self.cfg.target_tol {
                return Ok((order, bound));
            }
        }
        Err(Error::Convergence {
            target: self.cfg.target_tol,
            max_terms: self.cfg.max_terms,
            bound,
        })
    }

    fn sum_terms(&self, shape: Shape, order: usize, z: Complex64) -> Complex64 {
        let u = power(z, self.params.step());
        let mut acc = ComplexSum::new();
        let mut pw = Complex64::new(1.0, 0.0);
        for n in 0..=order {
            acc.add(pw * (self.weight(shape, n) * self.coeffs[n]));
            pw *= u;
        }
        match shape {
            Shape::Value => z * acc.value(),
            _ => acc.value(),
        }
    }

    pub fn eval(&self, shape: Shape, z: Complex64) -> Result<Evaluation> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::domain("z must be finite"));
        }
        let (order, error_bound) = self.truncation_order(shape, z.norm())?;
        Ok(Evaluation {
            value: self.sum_terms(shape, order, z),
            error_bound,
            order,
        })
    }

    /// Finite partial sum through `A_m` (exact up to rounding).
    pub fn partial(&self, shape: Shape, m: usize, z: Complex64) -> Complex64 {
        let order = m.min(self.coeffs.len() - 1);
        self.sum_terms(shape, order, z)
    }
}

/// `z^k` by repeated multiplication; keeps conjugate symmetry bit-exact.
pub(crate) fn power(z: Complex64, k: usize) -> Complex64 {
    let mut out = Complex64::new(1.0, 0.0);
    for _ in 0..k {
        out *= z;
    }
    out
}

pub fn eval_f(params: &HyperBesselParams, z: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    Ok(Evaluator::new(params, cfg)?.eval(Shape::Value, z)?.value)
}

pub fn eval_f_prime(
    params: &HyperBesselParams,
    z: Complex64,
    cfg: &EvalConfig,
) -> Result<Complex64> {
    Ok(Evaluator::new(params, cfg)?.eval(Shape::Derivative, z)?.value)
}

/// `z + Σ_{n=1..m} A_n z^(n(d+1)+1)`.
pub fn eval_partial(params: &HyperBesselParams, m: usize, z: Complex64) -> Complex64 {
    partial_sum(params, Shape::Value, m, z)
}

/// `1 + Σ_{n=1..m} (n(d+1)+1) A_n z^(n(d+1))`.
pub fn eval_partial_prime(params: &HyperBesselParams, m: usize, z: Complex64) -> Complex64 {
    partial_sum(params, Shape::Derivative, m, z)
}

fn partial_sum(params: &HyperBesselParams, shape: Shape, m: usize, z: Complex64) -> Complex64 {
    let step = params.step();
    let u = power(z, step);
    let mut acc = ComplexSum::new();
    let mut coeff = 1.0;
    let mut pw = Complex64::new(1.0, 0.0);
    for n in 0..=m {
        if n > 0 {
            coeff *= -coefficient_ratio(params, n - 1);
            pw *= u;
            if coeff == 0.0 {
                break;
            }
        }
        let w = match shape {
            Shape::Derivative => (n * step + 1) as f64,
            _ => 1.0,
        };
        acc.add(pw * (w * coeff));
    }
    match shape {
        Shape::Value => z * acc.value(),
        _ => acc.value(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::make_params;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn sine_reduction_at_one() {
        let p = make_params(1, &[0.5]).unwrap();
        let v = eval_f(&p, c(1.0, 0.0), &EvalConfig::default()).unwrap();
        assert_abs_diff_eq!(v.re, 1f64.sin(), epsilon = 1e-14);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn values_at_origin() {
        let p = make_params(3, &[0.2, 1.0, -0.5]).unwrap();
        let cfg = EvalConfig::default();
        assert_eq!(eval_f(&p, c(0.0, 0.0), &cfg).unwrap(), c(0.0, 0.0));
        assert_eq!(eval_f_prime(&p, c(0.0, 0.0), &cfg).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn cosine_derivative() {
        let p = make_params(1, &[0.5]).unwrap();
        let v = eval_f_prime(&p, c(0.3, 0.0), &EvalConfig::default()).unwrap();
        assert_abs_diff_eq!(v.re, 0.3f64.cos(), epsilon = 1e-14);
    }

    #[test]
    fn partial_sums_small_orders() {
        let p = make_params(1, &[0.5]).unwrap();
        let z = c(0.4, -0.7);
        assert_eq!(eval_partial(&p, 0, z), z);
        assert_eq!(eval_partial_prime(&p, 0, z), c(1.0, 0.0));
        assert_abs_diff_eq!(eval_partial(&p, 1, c(1.0, 0.0)).re, 5.0 / 6.0, epsilon = 1e-15);
        assert_abs_diff_eq!(eval_partial_prime(&p, 1, c(1.0, 0.0)).re, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn convergence_error_when_terms_capped() {
        let p = make_params(1, &[-0.9]).unwrap();
        let cfg = EvalConfig {
            target_tol: 1e-15,
            max_terms: 2,
            small_z_threshold: 0.1,
        };
        assert!(matches!(
            eval_f(&p, c(0.99, 0.0), &cfg),
            Err(Error::Convergence { .. })
        ));
    }

    #[test]
    fn ungated_params_still_converge_via_ratio_tail() {
        // 2λμ = 0.8: the geometric majorant diverges at r = 1
        let p = make_params(1, &[-0.9]).unwrap();
        let ev = Evaluator::new(&p, &EvalConfig::default()).unwrap();
        let out = ev.eval(Shape::Derivative, c(0.0, 0.999)).unwrap();
        assert!(out.error_bound <= 1e-13);
        let brute: Complex64 = (0..80)
            .map(|n| {
                let a = crate::coeffs::coefficient_direct(&p, n);
                c(0.0, 0.999).powu(2 * n as u32) * ((2 * n + 1) as f64 * a)
            })
            .sum();
        assert_abs_diff_eq!(out.value.re, brute.re, epsilon = 1e-12);
    }

    #[test]
    fn invalid_config_rejected() {
        let p = make_params(1, &[0.5]).unwrap();
        let bad = EvalConfig {
            small_z_threshold: 1.5,
            ..EvalConfig::default()
        };
        assert!(Evaluator::new(&p, &bad).is_err());
        assert!(Evaluator::new(&p, &EvalConfig::with_tol(0.0)).is_err());
    }
}
