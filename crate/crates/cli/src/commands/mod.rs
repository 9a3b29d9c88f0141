pub mod bounds;
pub mod coeffs;
pub mod eval;
pub mod report;
pub mod scan;
pub mod verify;

use anyhow::Result;
use clap::Args;
use hybess::{make_params, HyperBesselParams};
use serde_json::{json, Value};

use crate::args::{alpha_values, parse_alpha};

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// Number of α parameters.
    #[arg(short = 'd', long = "dim")]
    pub d: usize,
    /// Comma-separated α values; a single value is broadcast to all d slots.
    #[arg(short = 'a', long = "alpha", allow_hyphen_values = true)]
    pub alpha: String,
}

impl ParamArgs {
    /// α as typed (kept for exact-rational output) and parsed.
    pub fn resolve(&self) -> Result<(Vec<String>, HyperBesselParams)> {
        let raw = parse_alpha(&self.alpha, self.d)?;
        let values = alpha_values(&raw)?;
        Ok((raw, make_params(self.d, &values)?))
    }
}

pub fn params_json(p: &HyperBesselParams) -> Value {
    json!({
        "d": p.d(),
        "alpha": p.alpha(),
        "lambda": p.lambda(),
        "mu": p.mu(),
    })
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_FALSIFIED: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;
