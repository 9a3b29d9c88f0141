//! Browser bindings: a quotient heatmap over the unit disk, bound curves
//! across α and a small claim checker. Every export has a plain Rust twin
//! (`*_impl`) that the native tests call.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use hybess::bounds::{gates, lemma_modulus_bounds, theorem1_bounds, theorem2_bounds, BoundVariant};
use hybess::series::Evaluator;
use hybess::verify::{check_claim, check_univalence, claim_battery, SamplingConfig, Status, VerificationReport};
use hybess::{make_params, EvalConfig, HyperBesselParams, QuotientKind};
use num_complex::Complex64;
use serde::Serialize;
use wasm_bindgen::prelude::*;

fn parse_params(d: usize, alpha: &str) -> Result<HyperBesselParams, String> {
    let values: Vec<f64> = alpha
        .split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|_| format!("invalid alpha value `{s}`")))
        .collect::<Result<_, _>>()?;
    let values = match values.len() {
        1 => vec![values[0]; d],
        _ => values,
    };
    make_params(d, &values).map_err(|e| e.to_string())
}

fn parse_variant(s: &str) -> Result<BoundVariant, String> {
    s.parse().map_err(|_| format!("unknown variant `{s}`"))
}

/// Row-major `size × size` samples of `Re q(z)` on `[-1, 1]²`, top row first.
/// Points outside `|z| ≤ max_radius` or at a pole are NaN.
pub fn quotient_heatmap_impl(
    d: usize,
    alpha: &str,
    kind: &str,
    m: usize,
    size: usize,
    max_radius: f64,
) -> Result<Vec<f64>, String> {
    if !(2..=1024).contains(&size) {
        return Err("size must be between 2 and 1024".into());
    }
    let params = parse_params(d, alpha)?;
    let kind: QuotientKind = kind.parse().map_err(|_| format!("unknown quotient `{kind}`"))?;
    let eval = Evaluator::new(&params, &EvalConfig::default()).map_err(|e| e.to_string())?;
    let step = 2.0 / (size - 1) as f64;
    let mut out = Vec::with_capacity(size * size);
    for row in 0..size {
        let im = 1.0 - row as f64 * step;
        for col in 0..size {
            let z = Complex64::new(-1.0 + col as f64 * step, im);
            let v = if z.norm() > max_radius {
                f64::NAN
            } else {
                eval.quotient(kind, m, z).map(|e| e.value.re).unwrap_or(f64::NAN)
            };
            out.push(v);
        }
    }
    Ok(out)
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CurvePoint {
    pub alpha: f64,
    pub lambda_mu: f64,
    pub lemma_gate: bool,
    pub theorem1_gate: bool,
    pub theorem2_gate: bool,
    pub lemma: Option<[f64; 2]>,
    pub theorem1: Option<[f64; 2]>,
    pub theorem2: Option<[f64; 2]>,
}

/// Bounds with every α slot set to each of `steps` values in `[lo, hi]`.
pub fn bounds_curve_impl(d: usize, lo: f64, hi: f64, steps: usize, variant: &str) -> Result<Vec<CurvePoint>, String> {
    if steps < 2 || !(lo < hi) || lo <= -1.0 {
        return Err("need lo < hi, lo > -1 and at least two steps".into());
    }
    let variant = parse_variant(variant)?;
    (0..steps)
        .map(|i| {
            let a = lo + (hi - lo) * i as f64 / (steps - 1) as f64;
            let p = make_params(d, &vec![a; d]).map_err(|e| e.to_string())?;
            let g = gates(&p);
            Ok(CurvePoint {
                alpha: a,
                lambda_mu: p.lambda_mu(),
                lemma_gate: g.lemma.satisfied,
                theorem1_gate: g.theorem1.satisfied,
                theorem2_gate: g.theorem2.satisfied,
                lemma: lemma_modulus_bounds(&p).ok().map(|(x, y)| [x, y]),
                theorem1: theorem1_bounds(&p, variant).ok().map(|(x, y)| [x, y]),
                theorem2: theorem2_bounds(&p, variant).ok().map(|(x, y)| [x, y]),
            })
        })
        .collect()
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClaimSummary {
    pub claim: String,
    pub bound: Option<f64>,
    pub extremum: Option<f64>,
    pub margin: Option<f64>,
    pub witness: [f64; 2],
    pub status: Status,
    pub gate: bool,
}

fn summarize(r: &VerificationReport) -> ClaimSummary {
    let finite = |v: f64| v.is_finite().then_some(v);
    let f = &r.claim.functional;
    let label = match f.order() {
        Some(m) => format!("{} (m={m})", f.label()),
        None => f.label(),
    };
    ClaimSummary {
        claim: label,
        bound: finite(r.claim.bound),
        extremum: finite(r.extremum),
        margin: finite(r.margin),
        witness: [r.witness.re, r.witness.im],
        status: r.status,
        gate: r.claim.gate.satisfied,
    }
}

/// Lemma and theorem claims at order `m`, then `Re f′ > 0`.
pub fn check_claims_impl(
    d: usize,
    alpha: &str,
    variant: &str,
    m: usize,
    radii: usize,
    angles: usize,
) -> Result<Vec<ClaimSummary>, String> {
    let params = parse_params(d, alpha)?;
    let variant = parse_variant(variant)?;
    let cfg = SamplingConfig { radii, angles, ..SamplingConfig::default() };
    cfg.validate().map_err(|e| e.to_string())?;
    let eval = EvalConfig::default();
    let mut out: Vec<ClaimSummary> = claim_battery(&params, variant, &[m])
        .iter()
        .map(|c| summarize(&check_claim(c, &cfg, &eval)))
        .collect();
    let mut univalence = summarize(&check_univalence(&params, &cfg, &eval));
    univalence.claim = "Re f'".into();
    out.push(univalence);
    Ok(out)
}

fn to_js<T: Serialize>(r: Result<T, String>) -> Result<String, JsError> {
    let v = r.map_err(|e| JsError::new(&e))?;
    serde_json::to_string(&v).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn quotient_heatmap(
    d: usize,
    alpha: &str,
    kind: &str,
    m: usize,
    size: usize,
    max_radius: f64,
) -> Result<Vec<f64>, JsError> {
    quotient_heatmap_impl(d, alpha, kind, m, size, max_radius).map_err(|e| JsError::new(&e))
}

/// JSON array of [`CurvePoint`].
#[wasm_bindgen]
pub fn bounds_curve(d: usize, lo: f64, hi: f64, steps: usize, variant: &str) -> Result<String, JsError> {
    to_js(bounds_curve_impl(d, lo, hi, steps, variant))
}

/// JSON array of [`ClaimSummary`].
#[wasm_bindgen]
pub fn check_claims(
    d: usize,
    alpha: &str,
    variant: &str,
    m: usize,
    radii: usize,
    angles: usize,
) -> Result<String, JsError> {
    to_js(check_claims_impl(d, alpha, variant, m, radii, angles))
}
