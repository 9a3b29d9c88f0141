use std::path::PathBuf;

use anyhow::Result;
use clap::{Args, ValueEnum};
use hybess::bounds::{gates, BoundVariant};
use hybess::verify::{check_claim, check_univalence, claim_battery, SamplingConfig, Status, VerificationReport};
use hybess::{EvalConfig, HyperBesselParams};
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{params_json, ParamArgs, EXIT_FALSIFIED, EXIT_INCONCLUSIVE, EXIT_OK};
use crate::args::parse_orders;
use crate::manifest::RunManifest;
use crate::output::{emit, to_json_string};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClaimVariant {
    Paper,
    Corrected,
}

impl From<ClaimVariant> for BoundVariant {
    fn from(v: ClaimVariant) -> Self {
        match v {
            ClaimVariant::Paper => BoundVariant::PaperStated,
            ClaimVariant::Corrected => BoundVariant::CorrectedRational,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SamplingArgs {
    #[arg(long, default_value_t = 64)]
    pub radii: usize,
    #[arg(long, default_value_t = 256)]
    pub angles: usize,
    #[arg(long, default_value_t = 0.999)]
    pub max_radius: f64,
    /// Local refinement levels around the coarse extremum.
    #[arg(long, default_value_t = 2)]
    pub refine: usize,
    #[arg(long, default_value_t = 4)]
    pub refine_factor: usize,
    /// Nonzero adds a jittered replica of every grid point.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Absolute error target for series evaluation.
    #[arg(long, default_value_t = 1e-13)]
    pub tol: f64,
}

impl SamplingArgs {
    pub fn configs(&self) -> Result<(SamplingConfig, EvalConfig)> {
        let cfg = SamplingConfig {
            radii: self.radii,
            angles: self.angles,
            max_radius: self.max_radius,
            refine_levels: self.refine,
            refine_factor: self.refine_factor,
            seed: self.seed,
            ..SamplingConfig::default()
        };
        cfg.validate()?;
        let eval = EvalConfig::with_tol(self.tol);
        eval.validate()?;
        Ok((cfg, eval))
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Partial-sum orders, comma separated.
    #[arg(long = "m", default_value = "0,1,2,5")]
    pub orders: String,
    #[arg(long, value_enum, default_value_t = ClaimVariant::Corrected)]
    pub variant: ClaimVariant,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    /// Report path (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Record the wall-clock time in the manifest (breaks byte-identical reruns).
    #[arg(long)]
    pub timestamp: bool,
}

/// One adjudicated claim as written to the report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClaimRecord {
    pub source: String,
    pub kind: String,
    pub m: Option<usize>,
    pub variant: BoundVariant,
    pub bound: Option<f64>,
    pub gate_satisfied: bool,
    pub extremum: Option<f64>,
    pub witness: Witness,
    pub margin: Option<f64>,
    pub status: Status,
    pub eval_tol: Option<f64>,
    pub grid_slack: Option<f64>,
    pub samples_used: usize,
    pub excluded_points: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Summary {
    pub holds: usize,
    pub falsified: usize,
    pub inconclusive: usize,
    pub exit_code: u8,
}

impl Summary {
    pub fn from_statuses(statuses: impl IntoIterator<Item = Status>) -> Self {
        let mut s = Summary { holds: 0, falsified: 0, inconclusive: 0, exit_code: EXIT_OK };
        for st in statuses {
            match st {
                Status::Holds => s.holds += 1,
                Status::Falsified => s.falsified += 1,
                Status::Inconclusive => s.inconclusive += 1,
            }
        }
        s.exit_code = if s.falsified > 0 {
            EXIT_FALSIFIED
        } else if s.inconclusive > 0 {
            EXIT_INCONCLUSIVE
        } else {
            EXIT_OK
        };
        s
    }
}

fn finite(v: f64) -> Option<f64> {
    v.is_finite().then_some(v)
}

pub fn record(source: &str, r: &VerificationReport) -> ClaimRecord {
    ClaimRecord {
        source: source.to_string(),
        kind: r.claim.functional.label(),
        m: r.claim.functional.order(),
        variant: r.claim.variant,
        bound: finite(r.claim.bound),
        gate_satisfied: r.claim.gate.satisfied,
        extremum: finite(r.extremum),
        witness: Witness { re: r.witness.re, im: r.witness.im },
        margin: finite(r.margin),
        status: r.status,
        eval_tol: finite(r.eval_tol),
        grid_slack: finite(r.grid_slack),
        samples_used: r.samples_used,
        excluded_points: r.excluded_points,
        note: r.note.clone(),
    }
}

fn source_of(r: &VerificationReport) -> &'static str {
    use hybess::bounds::Functional;
    use hybess::QuotientKind;
    match r.claim.functional {
        Functional::Modulus { .. } => "lemma",
        Functional::Ratio { kind: QuotientKind::FOverFm | QuotientKind::FmOverF, .. } => "theorem1",
        Functional::Ratio { .. } => "theorem2",
    }
}

/// Lemma, theorem-1/2 claims for every order, then the univalence claim.
pub fn run_battery(
    params: &HyperBesselParams,
    variant: BoundVariant,
    orders: &[usize],
    cfg: &SamplingConfig,
    eval: &EvalConfig,
) -> Vec<ClaimRecord> {
    let mut records: Vec<ClaimRecord> = claim_battery(params, variant, orders)
        .iter()
        .map(|c| {
            let r = check_claim(c, cfg, eval);
            record(source_of(&r), &r)
        })
        .collect();
    let mut univalence = record("univalence", &check_univalence(params, cfg, eval));
    univalence.kind = "ReFPrime".to_string();
    univalence.m = None;
    records.push(univalence);
    records
}

pub fn run(a: &VerifyArgs) -> Result<u8> {
    let (raw_alpha, params) = a.params.resolve()?;
    let orders = parse_orders(&a.orders)?;
    let (cfg, eval) = a.sampling.configs()?;
    let variant = BoundVariant::from(a.variant);

    let claims = run_battery(&params, variant, &orders, &cfg, &eval);
    let summary = Summary::from_statuses(claims.iter().map(|c| c.status));
    let g = gates(&params);
    let inputs = json!({
        "d": a.params.d, "alpha": raw_alpha, "orders": orders, "variant": variant,
        "sampling": cfg, "eval": eval,
    });
    let doc = json!({
        "manifest": RunManifest::new("verify", inputs, a.timestamp),
        "params": params_json(&params),
        "gates": g,
        "testedRadius": cfg.max_radius,
        "claims": claims,
        "summary": summary,
    });
    emit(&to_json_string(&doc)?, a.out.as_deref())?;
    eprintln!(
        "{} holds, {} falsified, {} inconclusive",
        summary.holds, summary.falsified, summary.inconclusive
    );
    Ok(summary.exit_code)
}
