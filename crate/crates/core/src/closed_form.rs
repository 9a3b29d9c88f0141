//! Trigonometric closed forms of the `d = 1` reduction for orders 1/2 and 3/2.
//!
//! `φ_{1/2}(z) = sin z` and `φ_{3/2}(z) = 3 (sin z / z² − cos z / z)`. These
//! serve as oracles for the general series and never call into it.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::EvalConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigOrder {
    Half,
    ThreeHalves,
}

impl TrigOrder {
    pub fn from_nu(nu: f64) -> Result<Self> {
        if nu == 0.5 {
            Ok(TrigOrder::Half)
        } else if nu == 1.5 {
            Ok(TrigOrder::ThreeHalves)
        } else {
            Err(Error::domain(format!(
                "closed form available only for nu = 0.5 or 1.5, got {nu}"
            )))
        }
    }

    fn nu(self) -> f64 {
        match self {
            TrigOrder::Half => 0.5,
            TrigOrder::ThreeHalves => 1.5,
        }
    }
}

pub fn closed_form_phi(nu: f64, z: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    let order = TrigOrder::from_nu(nu)?;
    Ok(match order {
        TrigOrder::Half => z.sin(),
        TrigOrder::ThreeHalves if z.norm() < cfg.small_z_threshold => maclaurin(order, z, false),
        TrigOrder::ThreeHalves => 3.0 * (z.sin() / (z * z) - z.cos() / z),
    })
}

/// Derivative of [`closed_form_phi`]: `cos z`, or
/// `3 ((z² − 2) sin z + 2 z cos z) / z³`.
pub fn closed_form_phi_prime(nu: f64, z: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    let order = TrigOrder::from_nu(nu)?;
    Ok(match order {
        TrigOrder::Half => z.cos(),
        TrigOrder::ThreeHalves if z.norm() < cfg.small_z_threshold => maclaurin(order, z, true),
        TrigOrder::ThreeHalves => {
            let z2 = z * z;
            3.0 * ((z2 - 2.0) * z.sin() + 2.0 * z * z.cos()) / (z2 * z)
        }
    })
}

/// `Σ (−1)^n z^(2n+1) / (4^n n! (ν+1)_n)` (or its derivative) summed until
/// terms drop below one ulp of the running value.
fn maclaurin(order: TrigOrder, z: Complex64, derivative: bool) -> Complex64 {
    let nu = order.nu();
    let z2 = z * z;
    let mut term = Complex64::new(1.0, 0.0);
    let mut total = Complex64::new(0.0, 0.0);
    for n in 0..64 {
        if n > 0 {
            let k = n as f64;
            term = -term * z2 / (4.0 * k * (nu + k));
        }
        let weight = if derivative { (2 * n + 1) as f64 } else { 1.0 };
        let contrib = term * weight;
        total += contrib;
        if contrib.norm() <= f64::EPSILON * 1e-3 * total.norm().max(1e-300) {
            break;
        }
    }
    if derivative {
        total
    } else {
        z * total
    }
}
