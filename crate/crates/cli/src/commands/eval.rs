use anyhow::Result;
use clap::Args;
use hybess::series::{eval_partial, eval_partial_prime, Evaluator, Shape};
use hybess::EvalConfig;
use serde_json::json;

use super::{params_json, ParamArgs, EXIT_OK};
use crate::args::parse_complex;
use crate::manifest::RunManifest;
use crate::output::{emit, fmt_f64, to_json_string};

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Evaluation point, e.g. `0.5+0.25i`.
    #[arg(short = 'z', long, allow_hyphen_values = true)]
    pub z: String,
    /// Evaluate the derivative instead of the function.
    #[arg(long)]
    pub derivative: bool,
    /// Evaluate the partial sum through A_m instead of the full series.
    #[arg(long, value_name = "M")]
    pub partial: Option<usize>,
    /// Absolute error target for the truncated series.
    #[arg(long, default_value_t = 1e-13)]
    pub tol: f64,
    #[arg(long, default_value_t = 200)]
    pub max_terms: usize,
    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

pub fn run(a: &EvalArgs) -> Result<u8> {
    let (raw_alpha, params) = a.params.resolve()?;
    let z = parse_complex(&a.z)?;
    let cfg = EvalConfig {
        target_tol: a.tol,
        max_terms: a.max_terms,
        ..EvalConfig::default()
    };
    let (value, order, error_bound) = match a.partial {
        Some(m) => {
            let v = if a.derivative {
                eval_partial_prime(&params, m, z)
            } else {
                eval_partial(&params, m, z)
            };
            (v, m, 0.0)
        }
        None => {
            let shape = if a.derivative { Shape::Derivative } else { Shape::Value };
            let e = Evaluator::new(&params, &cfg)?.eval(shape, z)?;
            (e.value, e.order, e.error_bound)
        }
    };
    let function = match (a.derivative, a.partial.is_some()) {
        (false, false) => "f",
        (true, false) => "f_prime",
        (false, true) => "partial",
        (true, true) => "partial_prime",
    };
    if a.json {
        let inputs = json!({
            "d": a.params.d, "alpha": raw_alpha, "z": a.z, "derivative": a.derivative,
            "partial": a.partial, "tol": a.tol, "maxTerms": a.max_terms,
        });
        let doc = json!({
            "manifest": RunManifest::new("eval", inputs, false),
            "params": params_json(&params),
            "function": function,
            "z": {"re": z.re, "im": z.im},
            "value": {"re": value.re, "im": value.im},
            "order": order,
            "errorBound": error_bound,
        });
        emit(&to_json_string(&doc)?, None)?;
    } else {
        let sign = if value.im.is_sign_negative() { "-" } else { "+" };
        println!("{function}(z) = {}{sign}{}i", fmt_f64(value.re), fmt_f64(value.im.abs()));
        println!("order = {order}");
        println!("error_bound = {}", fmt_f64(error_bound));
    }
    Ok(EXIT_OK)
}
