use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of the complex plane.
pub type ComplexPoint = num_complex::Complex64;

/// Dimension, parameter vector and the two derived constants
/// `λ = (d+1)^(d+1)` and `μ = ∏(α_i+1)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HyperBesselParams {
    d: usize,
    alpha: Vec<f64>,
    lambda: f64,
    mu: f64,
}

pub fn make_params(d: usize, alpha: &[f64]) -> Result<HyperBesselParams> {
    HyperBesselParams::new(d, alpha)
}

impl HyperBesselParams {
    pub fn new(d: usize, alpha: &[f64]) -> Result<Self> {
        if d < 1 {
            return Err(Error::domain("dimension d must be at least 1"));
        }
        if alpha.len() != d {
            return Err(Error::domain(format!(
                "expected {d} alpha values, got {}",
                alpha.len()
            )));
        }
        if let Some(a) = alpha.iter().find(|a| !a.is_finite() || **a <= -1.0) {
            return Err(Error::domain(format!("alpha_i must be finite and > -1, got {a}")));
        }
        Ok(HyperBesselParams {
            d,
            alpha: alpha.to_vec(),
            lambda: lambda_for(d),
            mu: mu_for(alpha),
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// `λμ`, the quantity every gate and bound is written in.
    pub fn lambda_mu(&self) -> f64 {
        self.lambda * self.mu
    }

    /// Exponent step `d+1` between consecutive nonzero terms.
    pub fn step(&self) -> usize {
        self.d + 1
    }
}

pub(crate) fn lambda_for(d: usize) -> f64 {
    let base = (d + 1) as f64;
    base.powi(d as i32 + 1)
}

pub(crate) fn mu_for(alpha: &[f64]) -> f64 {
    alpha.iter().map(|a| a + 1.0).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bessel_half_order() {
        let p = make_params(1, &[0.5]).unwrap();
        assert_eq!(p.lambda(), 4.0);
        assert_eq!(p.mu(), 1.5);
        assert_eq!(p.lambda_mu(), 6.0);
    }

    #[test]
    fn two_dimensional_zero_shift() {
        let p = make_params(2, &[0.0, 0.0]).unwrap();
        assert_eq!(p.lambda(), 27.0);
        assert_eq!(p.mu(), 1.0);
    }

    #[test]
    fn rejects_boundary_and_bad_shapes() {
        assert!(matches!(make_params(1, &[-1.0]), Err(Error::Domain(_))));
        assert!(matches!(make_params(0, &[]), Err(Error::Domain(_))));
        assert!(matches!(make_params(2, &[0.5]), Err(Error::Domain(_))));
        assert!(matches!(make_params(1, &[f64::NAN]), Err(Error::Domain(_))));
    }

    #[test]
    fn derived_constants_are_recomputable() {
        let p = make_params(3, &[0.2, -0.5, 4.0]).unwrap();
        assert_eq!(p.lambda(), lambda_for(3));
        assert_eq!(p.mu(), mu_for(p.alpha()));
        assert!(p.lambda() >= 4.0 && p.mu() > 0.0);
    }
}
