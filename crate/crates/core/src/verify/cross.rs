use serde::Serialize;

use crate::closed_form::{closed_form_phi, closed_form_phi_prime};
use crate::params::HyperBesselParams;
use crate::series::{EvalConfig, Evaluator, Shape};

use super::sampling::{sample_disk, SamplingConfig};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "camelCase")]
pub enum CrossValidation {
    Skipped { reason: String },
    #[serde(rename_all = "camelCase")]
    Residuals {
        max_value_residual: f64,
        max_derivative_residual: f64,
        tolerance: f64,
        samples: usize,
        passed: bool,
    },
}

/// Compares the series against the trigonometric closed forms on the sample
/// set; only defined for `d = 1`, `ν ∈ {1/2, 3/2}`.
pub fn cross_validate(params: &HyperBesselParams, cfg: &SamplingConfig, eval_cfg: &EvalConfig) -> CrossValidation {
    let nu = params.alpha()[0];
    if params.d() != 1 || !(nu == 0.5 || nu == 1.5) {
        return CrossValidation::Skipped {
            reason: "closed form available only for d = 1 with nu in {0.5, 1.5}".into(),
        };
    }
    let ev = match Evaluator::new(params, eval_cfg) {
        Ok(ev) => ev,
        Err(e) => return CrossValidation::Skipped { reason: e.to_string() },
    };
    let points = sample_disk(cfg);
    let mut max_value_residual = 0.0f64;
    let mut max_derivative_residual = 0.0f64;
    for &z in &points {
        let pair = (|| {
            let f = ev.eval(Shape::Value, z).ok()?.value;
            let fp = ev.eval(Shape::Derivative, z).ok()?.value;
            let g = closed_form_phi(nu, z, eval_cfg).ok()?;
            let gp = closed_form_phi_prime(nu, z, eval_cfg).ok()?;
            Some(((f - g).norm(), (fp - gp).norm()))
        })();
        let (rv, rd) = pair.unwrap_or((f64::INFINITY, f64::INFINITY));
        max_value_residual = max_value_residual.max(rv);
        max_derivative_residual = max_derivative_residual.max(rd);
    }
    let tolerance = 10.0 * eval_cfg.target_tol;
    CrossValidation::Residuals {
        max_value_residual,
        max_derivative_residual,
        tolerance,
        samples: points.len(),
        passed: max_value_residual <= tolerance && max_derivative_residual <= tolerance,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::make_params;

    #[test]
    fn both_orders_pass() {
        let cfg = SamplingConfig {
            radii: 16,
            angles: 32,
            ..SamplingConfig::default()
        };
        for nu in [0.5, 1.5] {
            let out = cross_validate(&make_params(1, &[nu]).unwrap(), &cfg, &EvalConfig::default());
            match out {
                CrossValidation::Residuals { passed, max_value_residual, max_derivative_residual, .. } => {
                    assert!(passed, "nu={nu}: {max_value_residual:e} {max_derivative_residual:e}")
                }
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn other_params_skipped() {
        let cfg = SamplingConfig::default();
        let out = cross_validate(&make_params(2, &[0.5, 0.5]).unwrap(), &cfg, &EvalConfig::default());
        assert!(matches!(out, CrossValidation::Skipped { .. }));
    }
}
