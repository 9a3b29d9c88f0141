use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Polar sampling of the closed sub-disk `|z| ≤ max_radius`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SamplingConfig {
    pub radii: usize,
    pub angles: usize,
    pub max_radius: f64,
    pub refine_levels: usize,
    pub refine_factor: usize,
    /// Nonzero adds one jittered replica per grid point.
    pub seed: u64,
    /// Multiplier on the local gradient norm in the indeterminacy band.
    pub slack_scale: f64,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig {
            radii: 64,
            angles: 256,
            max_radius: 1.0 - 1e-3,
            refine_levels: 2,
            refine_factor: 4,
            seed: 0,
            slack_scale: 1e-4,
        }
    }
}

impl SamplingConfig {
    pub fn validate(&self) -> Result<()> {
        if self.radii == 0 || self.angles == 0 {
            return Err(Error::domain("radii and angles must be positive"));
        }
        if !(self.max_radius > 0.0 && self.max_radius < 1.0) {
            return Err(Error::domain("maxRadius must lie in (0, 1)"));
        }
        if self.refine_factor == 0 {
            return Err(Error::domain("refineFactor must be positive"));
        }
        if !(self.slack_scale >= 0.0) {
            return Err(Error::domain("slack scale must be nonnegative"));
        }
        Ok(())
    }

    /// Ring radius `k ∈ 1..=radii`; quadratic schedule clustered at the rim.
    pub fn ring_radius(&self, k: usize) -> f64 {
        let t = 1.0 - k as f64 / self.radii as f64;
        self.max_radius * (1.0 - t * t)
    }

    /// Half-widths `(Δr, Δθ)` of the coarse cell around radius `r`.
    pub fn cell_at(&self, r: f64) -> (f64, f64) {
        let t = 1.0 - (1.0 - (r / self.max_radius).clamp(0.0, 1.0)).sqrt();
        let radii = self.radii as f64;
        let dr = (self.max_radius * 2.0 * (1.0 - t) / radii).max(self.max_radius / (radii * radii));
        (dr, PI / self.angles as f64)
    }
}

/// `r·e^{2πij/n}` with exact values on the axes and bit-exact conjugate
/// pairs for `j` and `n − j`.
pub fn ring_point(r: f64, j: usize, n: usize) -> Complex64 {
    let j = j % n;
    if 2 * j > n {
        return ring_point(r, n - j, n).conj();
    }
    if (4 * j).is_multiple_of(n) {
        return match 4 * j / n {
            0 => Complex64::new(r, 0.0),
            1 => Complex64::new(0.0, r),
            _ => Complex64::new(-r, 0.0),
        };
    }
    let theta = 2.0 * PI * j as f64 / n as f64;
    Complex64::new(r * theta.cos(), r * theta.sin())
}

/// Origin, then `radii × angles` ring points, then (seed ≠ 0) one jittered
/// replica per ring point.
pub fn sample_disk(cfg: &SamplingConfig) -> Vec<Complex64> {
    let mut points = Vec::with_capacity(1 + 2 * cfg.radii * cfg.angles);
    points.push(Complex64::new(0.0, 0.0));
    for k in 1..=cfg.radii {
        let r = cfg.ring_radius(k);
        points.extend((0..cfg.angles).map(|j| ring_point(r, j, cfg.angles)));
    }
    if cfg.seed != 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for k in 1..=cfg.radii {
            let r = cfg.ring_radius(k);
            let (dr, dth) = cfg.cell_at(r);
            for j in 0..cfg.angles {
                let rr = (r + dr * rng.gen_range(-0.5..0.5)).clamp(0.0, cfg.max_radius);
                let th = 2.0 * PI * j as f64 / cfg.angles as f64 + dth * rng.gen_range(-0.5..0.5);
                points.push(Complex64::from_polar(rr, th));
            }
        }
    }
    points
}

/// `factor × factor` polar subgrid around `center` with half-widths `(dr, dθ)`,
/// offsets `(2i − (factor−1)) / factor`, radii clamped to `[0, max_radius]`.
pub fn refine_points(center: Complex64, half_width: (f64, f64), factor: usize, max_radius: f64) -> Vec<Complex64> {
    let (r0, th0) = center.to_polar();
    let offsets: Vec<f64> = (0..factor)
        .map(|i| (2.0 * i as f64 - (factor as f64 - 1.0)) / factor as f64)
        .collect();
    let mut out = Vec::with_capacity(factor * factor);
    for &a in &offsets {
        let r = (r0 + a * half_width.0).clamp(0.0, max_radius);
        for &b in &offsets {
            out.push(Complex64::from_polar(r, th0 + b * half_width.1));
        }
    }
    out
}
