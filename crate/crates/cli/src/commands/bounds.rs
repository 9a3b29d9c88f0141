use anyhow::Result;
use clap::{Args, ValueEnum};
use hybess::bounds::{
    exact_bounds, format_rational, formulas, gates, parse_decimal, BoundVariant, ExactBounds,
};
use hybess::HyperBesselParams;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::json;

use super::coeffs::Format;
use super::{params_json, ParamArgs, EXIT_OK};
use crate::manifest::RunManifest;
use crate::output::{csv_f64, emit, to_json_string};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Paper,
    Corrected,
    Both,
}

impl VariantArg {
    pub fn variants(self) -> Vec<BoundVariant> {
        match self {
            VariantArg::Paper => vec![BoundVariant::PaperStated],
            VariantArg::Corrected => vec![BoundVariant::CorrectedRational],
            VariantArg::Both => vec![BoundVariant::PaperStated, BoundVariant::CorrectedRational],
        }
    }
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum, default_value_t = VariantArg::Both)]
    pub variant: VariantArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

pub const SELF_INCONSISTENT: &str = "self-inconsistent (quotient(0)=1)";

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundRow {
    pub source: &'static str,
    pub kind: &'static str,
    pub variant: BoundVariant,
    pub gate_satisfied: bool,
    pub value: f64,
    pub exact: Option<String>,
    pub flag: Option<&'static str>,
}

fn exact_str(e: &Option<ExactBounds>, pick: impl Fn(&ExactBounds) -> &BigRational, defined: bool) -> Option<String> {
    e.as_ref().filter(|_| defined).map(|e| format_rational(pick(e)))
}

pub fn bound_rows(params: &HyperBesselParams, raw_alpha: &[String], variant: BoundVariant) -> Vec<BoundRow> {
    let g = gates(params);
    let (lam, mu) = (params.lambda(), params.mu());
    let lm = params.lambda_mu();
    let exact = raw_alpha
        .iter()
        .map(|s| parse_decimal(s))
        .collect::<Option<Vec<_>>>()
        .and_then(|alpha| exact_bounds(params.d(), &alpha, variant).ok());

    let (t1a, t1b) = match variant {
        BoundVariant::PaperStated => formulas::theorem1_paper(&lm),
        BoundVariant::CorrectedRational => formulas::theorem1_corrected(&lm),
    };
    let (t2a, t2b) = match variant {
        BoundVariant::PaperStated => formulas::theorem2_paper(&lam, &mu),
        BoundVariant::CorrectedRational => formulas::theorem2_corrected(&lam, &mu),
    };
    let ratio = |source, kind, value: f64, gate: bool, ex: Option<String>| BoundRow {
        source,
        kind,
        variant,
        gate_satisfied: gate,
        value,
        exact: ex,
        flag: (value > 1.0).then_some(SELF_INCONSISTENT),
    };
    let finite = |v: f64| v.is_finite();
    let mut rows = Vec::new();
    if variant == BoundVariant::PaperStated {
        let (lf, lfp) = if g.lemma.satisfied {
            formulas::lemma(&lam, &mu)
        } else {
            (f64::NAN, f64::NAN)
        };
        rows.push(BoundRow {
            source: "lemma",
            kind: "ModulusF",
            variant,
            gate_satisfied: g.lemma.satisfied,
            value: lf,
            exact: exact_str(&exact, |e| &e.lemma.0, g.lemma.satisfied),
            flag: None,
        });
        rows.push(BoundRow {
            source: "lemma",
            kind: "ModulusFPrime",
            variant,
            gate_satisfied: g.lemma.satisfied,
            value: lfp,
            exact: exact_str(&exact, |e| &e.lemma.1, g.lemma.satisfied),
            flag: None,
        });
    }
    rows.push(ratio("theorem1", "F_over_Fm", t1a, g.theorem1.satisfied, exact_str(&exact, |e| &e.theorem1.0, finite(t1a))));
    rows.push(ratio("theorem1", "Fm_over_F", t1b, g.theorem1.satisfied, exact_str(&exact, |e| &e.theorem1.1, finite(t1b))));
    rows.push(ratio("theorem2", "Fp_over_Fmp", t2a, g.theorem2.satisfied, exact_str(&exact, |e| &e.theorem2.0, finite(t2a))));
    rows.push(ratio("theorem2", "Fmp_over_Fp", t2b, g.theorem2.satisfied, exact_str(&exact, |e| &e.theorem2.1, finite(t2b))));
    rows
}

pub fn run(a: &BoundsArgs) -> Result<u8> {
    let (raw_alpha, params) = a.params.resolve()?;
    let g = gates(&params);
    let rows: Vec<BoundRow> = a
        .variant
        .variants()
        .into_iter()
        .flat_map(|v| bound_rows(&params, &raw_alpha, v))
        .collect();
    let exact_t2 = raw_alpha
        .iter()
        .map(|s| parse_decimal(s))
        .collect::<Option<Vec<_>>>()
        .and_then(|alpha| exact_bounds(params.d(), &alpha, BoundVariant::PaperStated).ok());

    match a.format {
        Format::Csv => {
            let mut out = String::from("source,kind,variant,gate_satisfied,value,exact,flag\n");
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    r.source,
                    r.kind,
                    r.variant,
                    r.gate_satisfied,
                    csv_f64(r.value),
                    r.exact.as_deref().unwrap_or(""),
                    r.flag.unwrap_or("")
                ));
            }
            emit(&out, None)?;
        }
        Format::Json => {
            let inputs = json!({"d": a.params.d, "alpha": raw_alpha, "variant": format!("{:?}", a.variant)});
            let doc = json!({
                "manifest": RunManifest::new("bounds", inputs, false),
                "params": params_json(&params),
                "gates": {
                    "lemma": g.lemma,
                    "theorem1": g.theorem1,
                    "theorem2": g.theorem2,
                    "theorem2Numerator": g.theorem2_numerator,
                    "theorem2Denominator": g.theorem2_denominator,
                    "theorem2NumeratorExact": exact_t2.as_ref().map(|e| format_rational(&e.theorem2_numerator)),
                    "criticalMu": g.critical_mu,
                },
                "bounds": rows,
            });
            emit(&to_json_string(&doc)?, None)?;
        }
    }
    Ok(EXIT_OK)
}
