//! Power-series coefficients `A_n` and rigorous tail bounds.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::HyperBesselParams;

/// `A_0..=A_N` built by the ratio recurrence.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoefficientTable {
    params: HyperBesselParams,
    values: Vec<f64>,
}

impl CoefficientTable {
    pub fn params(&self) -> &HyperBesselParams {
        &self.params
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Truncation order `N` (the table holds `N + 1` values).
    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<f64> {
        self.values.get(n).copied()
    }

    /// `1 / (2^(n−1) (λμ)^n)`, the magnitude bound every `|A_n|`, `n ≥ 1`,
    /// satisfies via `n! ≥ 2^(n−1)` and `(α+1)_n ≥ (α+1)^n`.
    pub fn decay_certificate(&self, n: usize) -> f64 {
        decay_certificate(&self.params, n)
    }

    /// Indices `1..=N` where the decay certificate is violated beyond rounding.
    pub fn decay_violations(&self) -> Vec<usize> {
        (1..self.values.len())
            .filter(|&n| {
                let cert = self.decay_certificate(n);
                self.values[n].abs() > cert * (1.0 + 8.0 * f64::EPSILON * n as f64)
            })
            .collect()
    }

    /// `|A_{n+1} / A_n| = 1 / ((n+1) λ ∏(α_i+1+n))`.
    pub fn ratio(&self, n: usize) -> f64 {
        coefficient_ratio(&self.params, n)
    }
}

pub(crate) fn decay_certificate(params: &HyperBesselParams, n: usize) -> f64 {
    if n == 0 {
        return 1.0;
    }
    2.0 / (2.0 * params.lambda_mu()).powi(n as i32)
}

pub(crate) fn coefficient_ratio(params: &HyperBesselParams, n: usize) -> f64 {
    let shift = n as f64;
    let pochhammer_step: f64 = params.alpha().iter().map(|a| a + 1.0 + shift).product();
    1.0 / ((shift + 1.0) * params.lambda() * pochhammer_step)
}

pub fn coefficient_table(params: &HyperBesselParams, order: usize) -> Result<CoefficientTable> {
    if order < 1 {
        return Err(Error::domain("coefficient table order must be at least 1"));
    }
    let mut values = Vec::with_capacity(order + 1);
    values.push(1.0);
    for n in 0..order {
        let shift = n as f64;
        let pochhammer_step: f64 = params.alpha().iter().map(|a| a + 1.0 + shift).product();
        let next = -values[n] / ((shift + 1.0) * params.lambda() * pochhammer_step);
        if !next.is_finite() {
            return Err(Error::Overflow { index: n + 1 });
        }
        values.push(next);
    }
    Ok(CoefficientTable {
        params: params.clone(),
        values,
    })
}

/// `A_n` from the closed formula, accumulated in log space.
///
/// Independent of the recurrence in [`coefficient_table`]; used to check it.
pub fn coefficient_direct(params: &HyperBesselParams, n: usize) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let ln_factorial: f64 = (1..=n).map(|k| (k as f64).ln()).sum();
    let ln_power = (n * params.step()) as f64 * (params.step() as f64).ln();
    let ln_pochhammer: f64 = params
        .alpha()
        .iter()
        .map(|a| (0..n).map(|k| (a + 1.0 + k as f64).ln()).sum::<f64>())
        .sum();
    let magnitude = (-(ln_factorial + ln_power + ln_pochhammer)).exp();
    if n.is_multiple_of(2) {
        magnitude
    } else {
        -magnitude
    }
}

/// Geometric ratio `q = r^(d+1) / (2λμ)` of the tail majorant.
fn tail_ratio(params: &HyperBesselParams, r: f64) -> Result<f64> {
    if !(r >= 0.0) || !r.is_finite() {
        return Err(Error::domain(format!("radius must be finite and >= 0, got {r}")));
    }
    let q = r.powi(params.step() as i32) / (2.0 * params.lambda_mu());
    if q >= 1.0 {
        return Err(Error::domain(format!(
            "geometric tail ratio r^(d+1)/(2*lambda*mu) = {q} is not below 1"
        )));
    }
    Ok(q)
}

/// Upper bound on `Σ_{n>N} |A_n| r^(n(d+1)+1)` from `|A_n| ≤ 2 (2λμ)^(−n)`.
pub fn tail_bound(params: &HyperBesselParams, order: usize, r: f64) -> Result<f64> {
    Ok(r * reduced_tail_bound(params, order, r)?)
}

/// Same bound for the series of `f(z)/z`: `Σ_{n>N} |A_n| r^(n(d+1))`.
pub fn reduced_tail_bound(params: &HyperBesselParams, order: usize, r: f64) -> Result<f64> {
    let q = tail_ratio(params, r)?;
    Ok(2.0 * q.powi(order as i32 + 1) / (1.0 - q))
}

/// Bound on `Σ_{n>N} (n(d+1)+1) |A_n| r^(n(d+1))`, the tail of `f′`.
pub fn derivative_tail_bound(params: &HyperBesselParams, order: usize, r: f64) -> Result<f64> {
    let q = tail_ratio(params, r)?;
    let big_n = order as f64;
    let head = q.powi(order as i32 + 1);
    // Σ_{n>N} n q^n = q^(N+1) ((N+1) − N q) / (1−q)^2
    let weighted = head * ((big_n + 1.0) - big_n * q) / ((1.0 - q) * (1.0 - q));
    let plain = head / (1.0 - q);
    Ok(2.0 * (params.step() as f64 * weighted + plain))
}
