use anyhow::Result;
use clap::{Args, ValueEnum};
use hybess::{coefficient_direct, coefficient_table};
use serde_json::json;

use super::{params_json, ParamArgs, EXIT_OK};
use crate::manifest::RunManifest;
use crate::output::{csv_f64, emit, to_json_string};

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Highest coefficient index N.
    #[arg(short = 'n', long, default_value_t = 20)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

pub fn run(a: &CoeffsArgs) -> Result<u8> {
    let (raw_alpha, params) = a.params.resolve()?;
    let table = coefficient_table(&params, a.order)?;
    let rows: Vec<_> = table
        .values()
        .iter()
        .enumerate()
        .map(|(n, &v)| {
            let direct = coefficient_direct(&params, n);
            let cert = table.decay_certificate(n);
            (n, v, direct, ((v - direct) / direct).abs(), cert)
        })
        .collect();
    let violations = table.decay_violations();
    match a.format {
        Format::Csv => {
            let mut out = String::from("n,recurrence,direct,relative_gap,decay_certificate,certified\n");
            for &(n, v, direct, gap, cert) in &rows {
                out.push_str(&format!(
                    "{n},{},{},{},{},{}\n",
                    csv_f64(v),
                    csv_f64(direct),
                    csv_f64(gap),
                    csv_f64(cert),
                    !violations.contains(&n)
                ));
            }
            emit(&out, None)?;
        }
        Format::Json => {
            let inputs = json!({"d": a.params.d, "alpha": raw_alpha, "order": a.order});
            let doc = json!({
                "manifest": RunManifest::new("coeffs", inputs, false),
                "params": params_json(&params),
                "coefficients": rows.iter().map(|&(n, v, direct, gap, cert)| json!({
                    "n": n, "recurrence": v, "direct": direct, "relativeGap": gap,
                    "decayCertificate": cert, "certified": !violations.contains(&n),
                })).collect::<Vec<_>>(),
                "decayHolds": violations.is_empty(),
            });
            emit(&to_json_string(&doc)?, None)?;
        }
    }
    Ok(EXIT_OK)
}
