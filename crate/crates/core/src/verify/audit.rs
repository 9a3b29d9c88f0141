use serde::Serialize;

use crate::coeffs::coefficient_table;
use crate::error::{Error, Result};
use crate::params::HyperBesselParams;

/// One Pochhammer-vs-power comparison `(α_i+1)_n` against `(α_i+1)^n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PochhammerCheck {
    pub n: usize,
    pub index: usize,
    pub pochhammer: f64,
    pub power: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditReport {
    pub order: usize,
    /// `n! ≥ 2^(n−1)` for every `1 ≤ n ≤ N`.
    pub factorial_holds: bool,
    /// `(α_i+1)_n ≥ (α_i+1)^n` for every `n`, `i`.
    pub pochhammer_lower_holds: bool,
    /// Cases where the reversed inequality `(α_i+1)^n ≥ (α_i+1)_n` fails.
    pub reversed_failures: Vec<PochhammerCheck>,
    /// `|A_n| ≤ 1/(2^(n−1)(λμ)^n)` for every `1 ≤ n ≤ N`.
    pub decay_holds: bool,
    pub decay_violations: Vec<usize>,
}

impl AuditReport {
    pub fn first_reversed_failure(&self) -> Option<&PochhammerCheck> {
        self.reversed_failures.first()
    }
}

/// Checks the elementary inequalities that feed the coefficient majorant,
/// and records every `(n, i)` where the reversed Pochhammer inequality fails.
pub fn coefficient_inequality_audit(params: &HyperBesselParams, order: usize) -> Result<AuditReport> {
    if order < 2 {
        return Err(Error::domain("audit order must be at least 2"));
    }
    let mut factorial_holds = true;
    let mut pochhammer_lower_holds = true;
    let mut reversed_failures = Vec::new();

    let mut factorial = 1.0f64;
    for n in 1..=order {
        factorial *= n as f64;
        if factorial < 2f64.powi(n as i32 - 1) {
            factorial_holds = false;
        }
        for (i, a) in params.alpha().iter().enumerate() {
            let base = a + 1.0;
            let pochhammer: f64 = (0..n).map(|k| base + k as f64).product();
            let power = base.powi(n as i32);
            if pochhammer < power * (1.0 - 4.0 * f64::EPSILON * n as f64) {
                pochhammer_lower_holds = false;
            }
            if power < pochhammer * (1.0 - 4.0 * f64::EPSILON * n as f64) {
                reversed_failures.push(PochhammerCheck {
                    n,
                    index: i,
                    pochhammer,
                    power,
                });
            }
        }
    }

    let table = coefficient_table(params, order)?;
    let decay_violations = table.decay_violations();
    Ok(AuditReport {
        order,
        factorial_holds,
        pochhammer_lower_holds,
        reversed_failures,
        decay_holds: decay_violations.is_empty(),
        decay_violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::make_params;

    #[test]
    fn half_order_reversed_direction_fails_at_two() {
        let r = coefficient_inequality_audit(&make_params(1, &[0.5]).unwrap(), 10).unwrap();
        assert!(r.factorial_holds && r.pochhammer_lower_holds && r.decay_holds);
        let first = r.first_reversed_failure().unwrap();
        assert_eq!((first.n, first.index), (2, 0));
        assert_eq!(first.power, 2.25);
        assert_eq!(first.pochhammer, 3.75);
    }

    #[test]
    fn zero_order() {
        let r = coefficient_inequality_audit(&make_params(1, &[0.0]).unwrap(), 10).unwrap();
        assert!(r.pochhammer_lower_holds);
        // (1)_n = n! > 1 = 1^n for n ≥ 2
        assert_eq!(r.reversed_failures.len(), 9);
    }

    #[test]
    fn negative_shift_still_satisfies_lower_direction() {
        let r = coefficient_inequality_audit(&make_params(2, &[-0.6, 2.0]).unwrap(), 25).unwrap();
        assert!(r.pochhammer_lower_holds && r.decay_holds);
        assert!(coefficient_inequality_audit(&make_params(1, &[0.5]).unwrap(), 1).is_err());
    }
}
