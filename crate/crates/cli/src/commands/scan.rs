use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::Args;
use hybess::bounds::{critical_mu, gates, BoundVariant};
use hybess::verify::Status;
use hybess::make_params;

use super::verify::{run_battery, ClaimRecord, ClaimVariant, Summary};
use super::EXIT_OK;
use crate::args::{alpha_values, parse_orders, Range};
use crate::output::{csv_f64, emit};

const SCAN_HELP: &str = "\
Writes one CSV row per scanned α. The scanned value fills α₁; the remaining
slots take --alpha-fixed (or the scanned value when it is omitted).

Fixed columns, in order:
  alpha, lambda, mu, lambda_mu, mu_star,
  lemma_gate, theorem1_gate, theorem2_gate, theorem2_numerator,
  lemma_gate_margin (2λμ−1), theorem1_gate_margin (λμ−3/2),
  theorem2_gate_margin (theorem-2 gate fraction),
  then for every claim (lemma, theorem1/2 per order m, univalence):
  <claim>_bound, <claim>_extremum, <claim>_margin, <claim>_status,
  and finally holds, falsified, inconclusive.
Claim prefixes: lemma_ModulusF, lemma_ModulusFPrime, F_over_Fm_m<M>,
Fm_over_F_m<M>, Fp_over_Fmp_m<M>, Fmp_over_Fp_m<M>, univalence_ReFPrime.
Floats use 17 significant digits; undefined values are empty.";

#[derive(Debug, Args)]
#[command(after_long_help = SCAN_HELP)]
pub struct ScanArgs {
    #[arg(short = 'd', long = "dim")]
    pub d: usize,
    /// Scanned α₁ values as lo:hi:steps (inclusive).
    #[arg(long, allow_hyphen_values = true)]
    pub alpha_range: String,
    /// Comma-separated values for α₂..α_d.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha_fixed: Option<String>,
    #[arg(long, value_enum, default_value_t = ClaimVariant::Corrected)]
    pub variant: ClaimVariant,
    #[arg(long = "m", default_value = "0")]
    pub orders: String,
    #[arg(long, default_value_t = 16)]
    pub radii: usize,
    #[arg(long, default_value_t = 64)]
    pub angles: usize,
    #[arg(long, default_value_t = 0.999)]
    pub max_radius: f64,
    #[arg(long, default_value_t = 1)]
    pub refine: usize,
    #[arg(long, default_value_t = 4)]
    pub refine_factor: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-13)]
    pub tol: f64,
    /// CSV path (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn claim_prefix(c: &ClaimRecord) -> String {
    match (c.source.as_str(), c.m) {
        ("univalence", _) => "univalence_ReFPrime".to_string(),
        (_, Some(m)) => format!("{}_m{m}", c.kind),
        (src, None) => format!("{src}_{}", c.kind),
    }
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Holds => "Holds",
        Status::Falsified => "Falsified",
        Status::Inconclusive => "Inconclusive",
    }
}

fn opt(v: Option<f64>) -> String {
    v.map(csv_f64).unwrap_or_default()
}

pub fn run(a: &ScanArgs) -> Result<u8> {
    if a.d == 0 {
        bail!("d must be at least 1");
    }
    let range = Range::parse(&a.alpha_range)?;
    let fixed: Vec<f64> = match &a.alpha_fixed {
        None => Vec::new(),
        Some(s) => {
            let raw: Vec<String> = s.split(',').map(|p| p.trim().to_string()).collect();
            let v = alpha_values(&raw)?;
            let want = a.d - 1;
            match v.len() {
                n if n == want => v,
                1 if want > 0 => vec![v[0]; want],
                n => bail!("--alpha-fixed has {n} entries, expected {want}"),
            }
        }
    };
    if range.lo <= -1.0 || fixed.iter().any(|&x| x <= -1.0) {
        bail!("scan range must stay within α > −1");
    }
    let orders = parse_orders(&a.orders)?;
    let sampling = super::verify::SamplingArgs {
        radii: a.radii,
        angles: a.angles,
        max_radius: a.max_radius,
        refine: a.refine,
        refine_factor: a.refine_factor,
        seed: a.seed,
        tol: a.tol,
    };
    let (cfg, eval) = sampling.configs()?;
    let variant = BoundVariant::from(a.variant);
    let mu_star = critical_mu(a.d);

    let mut header: Option<String> = None;
    let mut body = String::new();
    let mut prev_gate: Option<(f64, f64)> = None;
    let mut first_univalent: Option<f64> = None;
    for alpha1 in range.values() {
        let alpha: Vec<f64> = if a.alpha_fixed.is_some() {
            std::iter::once(alpha1).chain(fixed.iter().copied()).collect()
        } else {
            vec![alpha1; a.d]
        };
        let params = make_params(a.d, &alpha)?;
        let g = gates(&params);
        let claims = run_battery(&params, variant, &orders, &cfg, &eval);
        let summary = Summary::from_statuses(claims.iter().map(|c| c.status));

        if header.is_none() {
            let mut h = vec![
                "alpha", "lambda", "mu", "lambda_mu", "mu_star", "lemma_gate", "theorem1_gate",
                "theorem2_gate", "theorem2_numerator", "lemma_gate_margin", "theorem1_gate_margin",
                "theorem2_gate_margin",
            ]
            .into_iter()
            .map(String::from)
            .collect::<Vec<_>>();
            for c in &claims {
                let p = claim_prefix(c);
                for suffix in ["bound", "extremum", "margin", "status"] {
                    h.push(format!("{p}_{suffix}"));
                }
            }
            h.extend(["holds", "falsified", "inconclusive"].map(String::from));
            header = Some(h.join(","));
        }

        let mut row = vec![
            csv_f64(alpha1),
            csv_f64(params.lambda()),
            csv_f64(params.mu()),
            csv_f64(params.lambda_mu()),
            csv_f64(mu_star),
            g.lemma.satisfied.to_string(),
            g.theorem1.satisfied.to_string(),
            g.theorem2.satisfied.to_string(),
            csv_f64(g.theorem2_numerator),
            csv_f64(2.0 * params.lambda_mu() - 1.0),
            csv_f64(params.lambda_mu() - 1.5),
            csv_f64(g.theorem2_numerator / g.theorem2_denominator),
        ];
        for c in &claims {
            row.push(opt(c.bound));
            row.push(opt(c.extremum));
            row.push(opt(c.margin));
            row.push(status_str(c.status).to_string());
        }
        row.extend([summary.holds, summary.falsified, summary.inconclusive].map(|n| n.to_string()));
        body.push_str(&row.join(","));
        body.push('\n');

        if let Some((prev_alpha, prev_num)) = prev_gate {
            if (prev_num > 0.0) != (g.theorem2_numerator > 0.0) {
                eprintln!("theorem-2 gate changes sign in [{prev_alpha:.6}, {alpha1:.6}]");
            }
        }
        prev_gate = Some((alpha1, g.theorem2_numerator));
        let univalence = claims.last().and_then(|c| c.extremum);
        if first_univalent.is_none() && univalence.is_some_and(|v| v > 0.0) {
            first_univalent = Some(alpha1);
        }
    }
    match first_univalent {
        Some(v) => eprintln!("smallest scanned α with inf Re f′ > 0: {v:.6}"),
        None => eprintln!("no scanned α has inf Re f′ > 0"),
    }
    let mut out = header.unwrap_or_default();
    out.push('\n');
    out.push_str(&body);
    emit(&out, a.out.as_deref())?;
    Ok(EXIT_OK)
}
