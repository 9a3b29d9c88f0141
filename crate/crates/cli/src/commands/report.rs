use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Subcommand};
use serde::Deserialize;

use super::verify::{ClaimRecord, Summary};

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[command(subcommand)]
    pub action: ReportAction,
}

#[derive(Debug, Subcommand)]
pub enum ReportAction {
    /// Recount verdicts in a `verify` report; exits with the report's code.
    Summarize {
        path: PathBuf,
    },
}

#[derive(Debug, Deserialize)]
struct ReportFile {
    claims: Vec<ClaimRecord>,
    summary: Summary,
}

pub fn run(a: &ReportArgs) -> Result<u8> {
    match &a.action {
        ReportAction::Summarize { path } => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let report: ReportFile = serde_json::from_str(&text).context("parsing verify report")?;
            let recount = Summary::from_statuses(report.claims.iter().map(|c| c.status));
            if recount != report.summary {
                bail!("stored summary {:?} disagrees with claims {:?}", report.summary, recount);
            }
            for c in &report.claims {
                let m = c.m.map(|m| format!(" m={m}")).unwrap_or_default();
                let bound = c.bound.map(|b| format!("{b:.6}")).unwrap_or_else(|| "undefined".into());
                println!(
                    "{:<10} {:<13}{:<5} {:<17} bound={:<12} status={:?}",
                    c.source,
                    c.kind,
                    m,
                    format!("{:?}", c.variant),
                    bound,
                    c.status
                );
            }
            println!(
                "summary: holds={} falsified={} inconclusive={} exit={}",
                recount.holds, recount.falsified, recount.inconclusive, recount.exit_code
            );
            Ok(recount.exit_code)
        }
    }
}
