use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    gates, lemma_claims, BoundClaim, BoundVariant, Functional,
};
use crate::error::{Error, Result};
use crate::params::HyperBesselParams;
use crate::quotient::QuotientKind;
use crate::series::EvalConfig;

use super::extremum::{estimate_with, FunctionalEvaluator};
use super::sampling::SamplingConfig;

/// Claims with more than this fraction of excluded (pole) points are left open.
pub const MAX_EXCLUDED_FRACTION: f64 = 1e-3;

/// Step of the finite difference that estimates the local gradient.
const GRADIENT_STEP: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Holds,
    Falsified,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for Point {
    fn from(z: Complex64) -> Self {
        Point { re: z.re, im: z.im }
    }
}

impl From<Point> for Complex64 {
    fn from(p: Point) -> Self {
        Complex64::new(p.re, p.im)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub claim: BoundClaim,
    /// Estimated `inf Re(·)` (ratio kinds) or `sup |·|` (modulus kinds).
    pub extremum: f64,
    pub witness: Point,
    /// Positive when the sampled data agree with the claim.
    pub margin: f64,
    pub status: Status,
    pub samples_used: usize,
    pub excluded_points: usize,
    pub config: SamplingConfig,
    pub eval_tol: f64,
    pub grid_slack: f64,
    pub tested_radius: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl VerificationReport {
    fn open(claim: &BoundClaim, cfg: &SamplingConfig, note: String) -> Self {
        VerificationReport {
            claim: claim.clone(),
            extremum: f64::NAN,
            witness: Point { re: 0.0, im: 0.0 },
            margin: f64::NAN,
            status: Status::Inconclusive,
            samples_used: 0,
            excluded_points: 0,
            config: *cfg,
            eval_tol: f64::NAN,
            grid_slack: f64::NAN,
            tested_radius: cfg.max_radius,
            note: Some(note),
        }
    }

    /// Indeterminacy band `evalTol + gridSlack`.
    pub fn band(&self) -> f64 {
        self.eval_tol + self.grid_slack
    }
}

/// Verdict from a signed margin and the indeterminacy band.
pub fn classify(margin: f64, band: f64) -> Status {
    if margin.is_nan() || band.is_nan() {
        Status::Inconclusive
    } else if margin < -band {
        Status::Falsified
    } else if margin > band {
        Status::Holds
    } else {
        Status::Inconclusive
    }
}

/// Adjudicate a claim against sampled data. A failed gate leaves the claim
/// open; a ratio bound above 1 is refuted by `z = 0` where every quotient is 1.
pub fn check_claim(claim: &BoundClaim, cfg: &SamplingConfig, eval_cfg: &EvalConfig) -> VerificationReport {
    if !claim.gate.satisfied {
        return VerificationReport::open(claim, cfg, "gate failed".into());
    }
    if claim.functional.is_lower_bound() && claim.bound > 1.0 {
        return VerificationReport {
            claim: claim.clone(),
            extremum: 1.0,
            witness: Point { re: 0.0, im: 0.0 },
            margin: 1.0 - claim.bound,
            status: Status::Falsified,
            samples_used: 1,
            excluded_points: 0,
            config: *cfg,
            eval_tol: 0.0,
            grid_slack: 0.0,
            tested_radius: cfg.max_radius,
            note: Some("bound exceeds the quotient value 1 at z = 0".into()),
        };
    }
    adjudicate(claim, cfg, eval_cfg)
}

/// Sample, locate the extremum and classify, ignoring the gate.
pub(crate) fn adjudicate(claim: &BoundClaim, cfg: &SamplingConfig, eval_cfg: &EvalConfig) -> VerificationReport {
    if let Err(e) = cfg.validate().and_then(|_| eval_cfg.validate()) {
        return VerificationReport::open(claim, cfg, e.to_string());
    }
    let fe = match FunctionalEvaluator::new(claim.functional, &claim.params, eval_cfg) {
        Ok(fe) => fe,
        Err(e) => return VerificationReport::open(claim, cfg, e.to_string()),
    };
    let ext = match estimate_with(&fe, cfg) {
        Ok(ext) => ext,
        Err(e) => return VerificationReport::open(claim, cfg, e.to_string()),
    };
    let margin = if claim.functional.is_lower_bound() {
        ext.value - claim.bound
    } else {
        claim.bound - ext.value
    };
    let eval_tol = ext.error_bound;
    let grid_slack = cfg.slack_scale * fe.gradient_norm(ext.witness, GRADIENT_STEP) + eval_tol;
    let excluded_fraction = ext.excluded.len() as f64 / ext.samples_used as f64;
    let (status, note) = if excluded_fraction > MAX_EXCLUDED_FRACTION {
        (
            Status::Inconclusive,
            Some(format!(
                "{} of {} points excluded as zeros of a denominator",
                ext.excluded.len(),
                ext.samples_used
            )),
        )
    } else {
        (classify(margin, eval_tol + grid_slack), None)
    };
    VerificationReport {
        claim: claim.clone(),
        extremum: ext.value,
        witness: ext.witness.into(),
        margin,
        status,
        samples_used: ext.samples_used,
        excluded_points: ext.excluded.len(),
        config: *cfg,
        eval_tol,
        grid_slack,
        tested_radius: cfg.max_radius,
        note,
    }
}

/// `sup|f| ≤ (2λμ+1)/(2λμ−1)` and `sup|f′| ≤ (4λ²μ(μ+1)−1)/(2λμ−1)²`.
pub fn check_lemma_bounds(
    params: &HyperBesselParams,
    cfg: &SamplingConfig,
    eval_cfg: &EvalConfig,
) -> Result<(VerificationReport, VerificationReport)> {
    let g = gates(params).lemma;
    if !g.satisfied {
        return Err(Error::Gate {
            gate: "2*lambda*mu > 1",
            value: g.gate_value,
        });
    }
    let [f, fp] = lemma_claims(params);
    Ok((check_claim(&f, cfg, eval_cfg), check_claim(&fp, cfg, eval_cfg)))
}

/// The claim `Re f′ > 0` behind the univalence criterion.
pub fn univalence_claim(params: &HyperBesselParams) -> BoundClaim {
    BoundClaim {
        params: params.clone(),
        functional: Functional::Ratio {
            kind: QuotientKind::FpOverFmp,
            m: 0,
        },
        bound: 0.0,
        variant: BoundVariant::PaperStated,
        gate: gates(params).theorem2,
    }
}

/// Adjudicates `inf Re f′ > 0` whether or not the theorem-2 gate holds; the
/// gate outcome is carried in the report.
pub fn check_univalence(params: &HyperBesselParams, cfg: &SamplingConfig, eval_cfg: &EvalConfig) -> VerificationReport {
    let claim = univalence_claim(params);
    let mut report = adjudicate(&claim, cfg, eval_cfg);
    if !claim.gate.satisfied {
        let msg = "theorem-2 gate not satisfied; verdict is empirical only".to_string();
        report.note = Some(match report.note.take() {
            Some(n) => format!("{msg}; {n}"),
            None => msg,
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{theorem1_claims, theorem2_claims};
    use crate::params::make_params;

    fn quick() -> SamplingConfig {
        SamplingConfig {
            radii: 24,
            angles: 96,
            ..SamplingConfig::default()
        }
    }

    #[test]
    fn classification_bands() {
        assert_eq!(classify(1e-3, 1e-4), Status::Holds);
        assert_eq!(classify(-1e-3, 1e-4), Status::Falsified);
        assert_eq!(classify(5e-5, 1e-4), Status::Inconclusive);
        assert_eq!(classify(f64::NAN, 1e-4), Status::Inconclusive);
    }

    #[test]
    fn printed_sinc_bound_is_refuted_at_origin() {
        let p = make_params(1, &[0.5]).unwrap();
        let [c1, _] = theorem1_claims(&p, BoundVariant::PaperStated, 0);
        let r = check_claim(&c1, &quick(), &EvalConfig::default());
        assert_eq!(r.status, Status::Falsified);
        assert_eq!(r.witness, Point { re: 0.0, im: 0.0 });
        assert!(r.extremum <= 1.0);
    }

    #[test]
    fn corrected_sinc_bounds_hold() {
        let p = make_params(1, &[0.5]).unwrap();
        let [c1, c2] = theorem1_claims(&p, BoundVariant::CorrectedRational, 0);
        let r1 = check_claim(&c1, &quick(), &EvalConfig::default());
        assert_eq!(r1.status, Status::Holds);
        assert!((r1.margin - 0.0236).abs() < 1e-3, "{}", r1.margin);
        let r2 = check_claim(&c2, &quick(), &EvalConfig::default());
        assert_eq!(r2.status, Status::Holds);
        assert!((r2.margin - 0.0050).abs() < 1e-3, "{}", r2.margin);
    }

    #[test]
    fn failed_gate_is_inconclusive() {
        let p = make_params(1, &[0.3]).unwrap();
        let [c1, _] = theorem2_claims(&p, BoundVariant::CorrectedRational, 0);
        let r = check_claim(&c1, &quick(), &EvalConfig::default());
        assert_eq!(r.status, Status::Inconclusive);
        assert_eq!(r.note.as_deref(), Some("gate failed"));
    }

    #[test]
    fn lemma_half_order() {
        let p = make_params(1, &[0.5]).unwrap();
        let (rf, rfp) = check_lemma_bounds(&p, &quick(), &EvalConfig::default()).unwrap();
        assert_eq!(rf.status, Status::Holds);
        assert_eq!(rfp.status, Status::Holds);
        assert!((rf.extremum - 0.999f64.sinh()).abs() < 1e-12);
        assert!((rfp.extremum - 0.999f64.cosh()).abs() < 1e-12);
        assert!(check_lemma_bounds(&make_params(1, &[-0.9]).unwrap(), &quick(), &EvalConfig::default()).is_err());
    }

    #[test]
    fn univalence_cases() {
        let eval = EvalConfig::default();
        let r = check_univalence(&make_params(1, &[0.5]).unwrap(), &quick(), &eval);
        assert_eq!(r.status, Status::Holds);
        assert!((r.extremum - 0.999f64.cos()).abs() < 1e-12);
        let r = check_univalence(&make_params(1, &[-0.9]).unwrap(), &quick(), &eval);
        assert!(r.note.unwrap().contains("gate not satisfied"));
    }
}
