//! Bound constants, applicability gates and the critical order `ν*`.
//!
//! Every bound exists in two variants. [`BoundVariant::PaperStated`] keeps the
//! published closed forms verbatim. [`BoundVariant::CorrectedRational`] is
//! rebuilt from the Möbius-transform argument: when `c·Σ|A_n| ≤ 1` with
//! `c ≥ 1`, the quotients satisfy `Re(f/f_m) ≥ (c−1)/c` and
//! `Re(f_m/f) ≥ c/(c+1)`. Several published values exceed 1 even though each
//! quotient equals 1 at the origin; the corrected forms always lie in (0, 1).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{make_params, HyperBesselParams};
use crate::quotient::QuotientKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundVariant {
    PaperStated,
    CorrectedRational,
}

impl BoundVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundVariant::PaperStated => "paper",
            BoundVariant::CorrectedRational => "corrected",
        }
    }
}

impl fmt::Display for BoundVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "paper" | "paperstated" => Ok(BoundVariant::PaperStated),
            "corrected" | "correctedrational" => Ok(BoundVariant::CorrectedRational),
            _ => Err(Error::domain(format!("unknown bound variant `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModulusKind {
    ModulusF,
    ModulusFPrime,
}

/// The quantity a claim constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum Functional {
    /// Lower bound on `Re` of a quotient against the order-`m` partial sum.
    Ratio { kind: QuotientKind, m: usize },
    /// Upper bound on `|f|` or `|f′|`.
    Modulus { kind: ModulusKind },
}

impl Functional {
    pub fn is_lower_bound(&self) -> bool {
        matches!(self, Functional::Ratio { .. })
    }

    pub fn label(&self) -> String {
        match self {
            Functional::Ratio { kind, .. } => kind.as_str().to_string(),
            Functional::Modulus { kind } => match kind {
                ModulusKind::ModulusF => "ModulusF".into(),
                ModulusKind::ModulusFPrime => "ModulusFPrime".into(),
            },
        }
    }

    pub fn order(&self) -> Option<usize> {
        match self {
            Functional::Ratio { m, .. } => Some(*m),
            Functional::Modulus { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GateResult {
    pub satisfied: bool,
    pub gate_value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundClaim {
    pub params: HyperBesselParams,
    pub functional: Functional,
    pub bound: f64,
    pub variant: BoundVariant,
    pub gate: GateResult,
}

/// Raw values of the three gates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GateReport {
    /// `2λμ > 1`
    pub lemma: GateResult,
    /// `λμ > 3/2`
    pub theorem1: GateResult,
    /// `(4λ²μ² − 4λ²μ − 8λμ + 3) / (4λ²μ + 4λμ − 2) > 0`, taken together with the lemma gate.
    pub theorem2: GateResult,
    pub theorem2_numerator: f64,
    pub theorem2_denominator: f64,
    /// Larger root `μ*(d)` of the theorem-2 numerator.
    pub critical_mu: f64,
}

/// Closed forms shared by the floating-point and exact-rational paths.
pub mod formulas {
    use num_traits::{FromPrimitive, Num};

    fn k<T: FromPrimitive>(v: i64) -> T {
        T::from_i64(v).expect("small integer constant")
    }

    /// `((2λμ+1)/(2λμ−1), (4λ²μ(μ+1)−1)/(2λμ−1)²)`
    pub fn lemma<T: Num + Clone + FromPrimitive>(lam: &T, mu: &T) -> (T, T) {
        let two_lm = k::<T>(2) * lam.clone() * mu.clone();
        let f = (two_lm.clone() + T::one()) / (two_lm.clone() - T::one());
        let lam2 = lam.clone() * lam.clone();
        let fp_num = k::<T>(4) * lam2 * mu.clone() * (mu.clone() + T::one()) - T::one();
        let gap = two_lm - T::one();
        (f, fp_num / (gap.clone() * gap))
    }

    pub fn theorem1_paper<T: Num + Clone + FromPrimitive>(lm: &T) -> (T, T) {
        let two_lm = k::<T>(2) * lm.clone();
        (
            (two_lm.clone() - k(3)) / k(2),
            (two_lm - T::one()) / k(2),
        )
    }

    pub fn theorem1_corrected<T: Num + Clone + FromPrimitive>(lm: &T) -> (T, T) {
        let two_lm = k::<T>(2) * lm.clone();
        (
            (two_lm.clone() - k(3)) / (two_lm.clone() - T::one()),
            (two_lm.clone() - T::one()) / (two_lm + T::one()),
        )
    }

    /// `(4λ²μ² − 4λ²μ − 8λμ + 3, 4λ²μ + 4λμ − 2)`
    pub fn theorem2_gate_parts<T: Num + Clone + FromPrimitive>(lam: &T, mu: &T) -> (T, T) {
        let lam2 = lam.clone() * lam.clone();
        let lm = lam.clone() * mu.clone();
        let num = k::<T>(4) * lam2.clone() * mu.clone() * mu.clone()
            - k::<T>(4) * lam2.clone() * mu.clone()
            - k::<T>(8) * lm.clone()
            + k(3);
        let den = k::<T>(4) * lam2 * mu.clone() + k::<T>(4) * lm - k(2);
        (num, den)
    }

    pub fn theorem2_paper<T: Num + Clone + FromPrimitive>(lam: &T, mu: &T) -> (T, T) {
        let (num, den) = theorem2_gate_parts(lam, mu);
        let lm = lam.clone() * mu.clone();
        let second = k::<T>(4) * lm.clone() * lm.clone() - k::<T>(4) * lm + T::one();
        (num / den.clone(), second / den)
    }

    /// `((c₂−1)/c₂, c₂/(c₂+1))` with `c₂ = (2λμ−1)² / (4λ²μ + 4λμ − 2)`.
    pub fn theorem2_corrected<T: Num + Clone + FromPrimitive>(lam: &T, mu: &T) -> (T, T) {
        let (num, den) = theorem2_gate_parts(lam, mu);
        let gap = k::<T>(2) * lam.clone() * mu.clone() - T::one();
        let gap2 = gap.clone() * gap;
        (num / gap2.clone(), gap2.clone() / (gap2 + den))
    }

    /// `((8ν+5)/2, (8ν+7)/2)`
    pub fn corollary31_paper<T: Num + Clone + FromPrimitive>(nu: &T) -> (T, T) {
        let eight_nu = k::<T>(8) * nu.clone();
        ((eight_nu.clone() + k(5)) / k(2), (eight_nu + k(7)) / k(2))
    }

    /// `((64ν²+32ν−29)/(80ν+78), (64ν²+112ν+49)/(80ν+78))`
    pub fn corollary32_paper<T: Num + Clone + FromPrimitive>(nu: &T) -> (T, T) {
        let nu2 = nu.clone() * nu.clone();
        let den = k::<T>(80) * nu.clone() + k(78);
        let first = k::<T>(64) * nu2.clone() + k::<T>(32) * nu.clone() - k(29);
        let second = k::<T>(64) * nu2 + k::<T>(112) * nu.clone() + k(49);
        (first / den.clone(), second / den)
    }
}

fn gate(satisfied: bool, value: f64) -> GateResult {
    GateResult {
        satisfied,
        gate_value: value,
    }
}

/// Larger real root of `a x² + b x + c` (`a > 0`, nonnegative discriminant),
/// without cancellation.
pub fn larger_quadratic_root(a: f64, b: f64, c: f64) -> Option<f64> {
    let disc = b * b - 4.0 * a * c;
    if !(disc >= 0.0) || a == 0.0 {
        return None;
    }
    let q = -0.5 * (b + b.signum() * disc.sqrt());
    if q == 0.0 {
        return Some(0.0);
    }
    let (r1, r2) = (q / a, c / q);
    Some(r1.max(r2))
}

/// `μ*(d)`: larger root of `4λ²μ² − (4λ² + 8λ)μ + 3`.
pub fn critical_mu(d: usize) -> f64 {
    let lam = crate::params::lambda_for(d);
    larger_quadratic_root(4.0 * lam * lam, -(4.0 * lam * lam + 8.0 * lam), 3.0)
        .expect("discriminant is positive for every d")
}

/// Larger root of `64ν² + 32ν − 29`, the critical Bessel order (≈ 0.46807).
pub fn nu_star() -> f64 {
    larger_quadratic_root(64.0, 32.0, -29.0).expect("positive discriminant")
}

pub fn gates(params: &HyperBesselParams) -> GateReport {
    let lam = params.lambda();
    let mu = params.mu();
    let lm = params.lambda_mu();
    let lemma = gate(2.0 * lm > 1.0, 2.0 * lm);
    let (num, den) = formulas::theorem2_gate_parts(&lam, &mu);
    let t2 = num / den;
    GateReport {
        lemma,
        theorem1: gate(lm > 1.5, lm),
        theorem2: gate(t2 > 0.0 && lemma.satisfied, t2),
        theorem2_numerator: num,
        theorem2_denominator: den,
        critical_mu: critical_mu(params.d()),
    }
}

pub fn lemma_modulus_bounds(params: &HyperBesselParams) -> Result<(f64, f64)> {
    let g = gates(params).lemma;
    if !g.satisfied {
        return Err(Error::Gate {
            gate: "2*lambda*mu > 1",
            value: g.gate_value,
        });
    }
    Ok(formulas::lemma(&params.lambda(), &params.mu()))
}

/// Lower bounds for `Re(f/f_m)` and `Re(f_m/f)`.
pub fn theorem1_bounds(params: &HyperBesselParams, variant: BoundVariant) -> Result<(f64, f64)> {
    let g = gates(params).theorem1;
    if !g.satisfied {
        return Err(Error::Gate {
            gate: "lambda*mu > 3/2",
            value: g.gate_value,
        });
    }
    let lm = params.lambda_mu();
    Ok(match variant {
        BoundVariant::PaperStated => formulas::theorem1_paper(&lm),
        BoundVariant::CorrectedRational => formulas::theorem1_corrected(&lm),
    })
}

/// Lower bounds for `Re(f′/f′_m)` and `Re(f′_m/f′)`.
pub fn theorem2_bounds(params: &HyperBesselParams, variant: BoundVariant) -> Result<(f64, f64)> {
    let g = gates(params).theorem2;
    if !g.satisfied {
        return Err(Error::Gate {
            gate: "theorem-2 fraction > 0",
            value: g.gate_value,
        });
    }
    let (lam, mu) = (params.lambda(), params.mu());
    Ok(match variant {
        BoundVariant::PaperStated => formulas::theorem2_paper(&lam, &mu),
        BoundVariant::CorrectedRational => formulas::theorem2_corrected(&lam, &mu),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Corollary {
    /// Function quotients of the classical Bessel reduction.
    C31,
    /// Derivative quotients of the classical Bessel reduction.
    C32,
}

pub fn corollary_bounds(nu: f64, which: Corollary, variant: BoundVariant) -> Result<(f64, f64)> {
    match which {
        Corollary::C31 if !(nu > -0.625) => Err(Error::Gate {
            gate: "nu > -5/8",
            value: nu,
        }),
        Corollary::C32 if !(nu > nu_star()) => Err(Error::Gate {
            gate: "nu > nu_star",
            value: nu,
        }),
        _ => match variant {
            BoundVariant::PaperStated => Ok(match which {
                Corollary::C31 => formulas::corollary31_paper(&nu),
                Corollary::C32 => formulas::corollary32_paper(&nu),
            }),
            BoundVariant::CorrectedRational => {
                let params = make_params(1, &[nu])?;
                match which {
                    Corollary::C31 => theorem1_bounds(&params, variant),
                    Corollary::C32 => theorem2_bounds(&params, variant),
                }
            }
        },
    }
}

fn ratio_claim(
    params: &HyperBesselParams,
    kind: QuotientKind,
    m: usize,
    bound: f64,
    variant: BoundVariant,
    gate: GateResult,
) -> BoundClaim {
    BoundClaim {
        params: params.clone(),
        functional: Functional::Ratio { kind, m },
        bound,
        variant,
        gate,
    }
}

/// Claims for `Re(f/f_m)` and `Re(f_m/f)`; a failed gate yields NaN bounds.
pub fn theorem1_claims(params: &HyperBesselParams, variant: BoundVariant, m: usize) -> [BoundClaim; 2] {
    let g = gates(params).theorem1;
    let (b1, b2) = theorem1_bounds(params, variant).unwrap_or((f64::NAN, f64::NAN));
    [
        ratio_claim(params, QuotientKind::FOverFm, m, b1, variant, g),
        ratio_claim(params, QuotientKind::FmOverF, m, b2, variant, g),
    ]
}

pub fn theorem2_claims(params: &HyperBesselParams, variant: BoundVariant, m: usize) -> [BoundClaim; 2] {
    let g = gates(params).theorem2;
    let (b1, b2) = theorem2_bounds(params, variant).unwrap_or((f64::NAN, f64::NAN));
    [
        ratio_claim(params, QuotientKind::FpOverFmp, m, b1, variant, g),
        ratio_claim(params, QuotientKind::FmpOverFp, m, b2, variant, g),
    ]
}

/// Upper-bound claims on `sup|f|` and `sup|f′|`.
pub fn lemma_claims(params: &HyperBesselParams) -> [BoundClaim; 2] {
    let g = gates(params).lemma;
    let (bf, bfp) = lemma_modulus_bounds(params).unwrap_or((f64::NAN, f64::NAN));
    let claim = |kind, bound| BoundClaim {
        params: params.clone(),
        functional: Functional::Modulus { kind },
        bound,
        variant: BoundVariant::PaperStated,
        gate: g,
    };
    [
        claim(ModulusKind::ModulusF, bf),
        claim(ModulusKind::ModulusFPrime, bfp),
    ]
}

/// Exact-rational bound table for parameters given as decimal strings.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactBounds {
    pub lambda: BigRational,
    pub mu: BigRational,
    pub lemma: (BigRational, BigRational),
    pub theorem2_numerator: BigRational,
    pub theorem2_denominator: BigRational,
    pub theorem1: (BigRational, BigRational),
    pub theorem2: (BigRational, BigRational),
}

/// Parse a plain decimal (`-0.46807`, `3`, `1.5e-2` is rejected) into an exact rational.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer = BigInt::from_str_radix(if digits.is_empty() { "0" } else { &digits }, 10).ok()?;
    let denom = num_traits::pow(BigInt::from(10), frac_part.len());
    let value = BigRational::new(numer, denom);
    Some(if neg { -value } else { value })
}

pub fn exact_bounds(d: usize, alpha: &[BigRational], variant: BoundVariant) -> Result<ExactBounds> {
    if d < 1 || alpha.len() != d {
        return Err(Error::domain("alpha length must equal d >= 1"));
    }
    let one = BigRational::one();
    if alpha.iter().any(|a| *a <= -one.clone()) {
        return Err(Error::domain("alpha_i must be > -1"));
    }
    let base = BigRational::from_usize(d + 1).expect("small integer");
    let lambda = num_traits::pow(base, d + 1);
    let mu = alpha
        .iter()
        .fold(BigRational::one(), |acc, a| acc * (a.clone() + BigRational::one()));
    let lm = lambda.clone() * mu.clone();
    let two = BigRational::from_i64(2).unwrap();
    let safe = |num: BigRational, den: &BigRational| {
        if den.is_zero() {
            BigRational::zero()
        } else {
            num / den.clone()
        }
    };
    let lemma = if two.clone() * lm.clone() > one {
        formulas::lemma(&lambda, &mu)
    } else {
        (BigRational::zero(), BigRational::zero())
    };
    let (num, den) = formulas::theorem2_gate_parts(&lambda, &mu);
    let theorem1 = match variant {
        BoundVariant::PaperStated => formulas::theorem1_paper(&lm),
        BoundVariant::CorrectedRational => {
            let gap = two.clone() * lm.clone() - one.clone();
            (
                safe(two.clone() * lm.clone() - BigRational::from_i64(3).unwrap(), &gap),
                safe(gap.clone(), &(gap.clone() + two.clone())),
            )
        }
    };
    let theorem2 = match variant {
        BoundVariant::PaperStated => {
            let second = BigRational::from_i64(4).unwrap() * lm.clone() * lm.clone()
                - BigRational::from_i64(4).unwrap() * lm.clone()
                + one.clone();
            (safe(num.clone(), &den), safe(second, &den))
        }
        BoundVariant::CorrectedRational => {
            let gap = two * lm - one;
            let gap2 = gap.clone() * gap;
            (safe(num.clone(), &gap2), safe(gap2.clone(), &(gap2.clone() + den.clone())))
        }
    };
    Ok(ExactBounds {
        lambda,
        mu,
        lemma,
        theorem2_numerator: num,
        theorem2_denominator: den,
        theorem1,
        theorem2,
    })
}

/// `p/q` in lowest terms (`p` when `q = 1`).
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else if r.is_negative() {
        format!("-{}/{}", r.numer().abs(), r.denom())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn bessel(nu: f64) -> HyperBesselParams {
        make_params(1, &[nu]).unwrap()
    }

    #[test]
    fn lemma_values_half_order() {
        let (bf, bfp) = lemma_modulus_bounds(&bessel(0.5)).unwrap();
        assert_relative_eq!(bf, 13.0 / 11.0, max_relative = 1e-15);
        assert_relative_eq!(bfp, 239.0 / 121.0, max_relative = 1e-15);
    }

    #[test]
    fn lemma_gate_boundary() {
        // λμ = 4(ν+1) = 1/2  ⇒  2λμ = 1
        let p = bessel(-0.875);
        assert_eq!(2.0 * p.lambda_mu(), 1.0);
        assert!(matches!(lemma_modulus_bounds(&p), Err(Error::Gate { .. })));
    }

    #[test]
    fn theorem1_both_variants() {
        let p = bessel(0.5);
        assert_eq!(theorem1_bounds(&p, BoundVariant::PaperStated).unwrap(), (4.5, 5.5));
        let (a, b) = theorem1_bounds(&p, BoundVariant::CorrectedRational).unwrap();
        assert_relative_eq!(a, 9.0 / 11.0, max_relative = 1e-15);
        assert_relative_eq!(b, 11.0 / 13.0, max_relative = 1e-15);
        assert_eq!(theorem1_bounds(&bessel(1.5), BoundVariant::PaperStated).unwrap(), (8.5, 9.5));
        assert!(theorem1_bounds(&bessel(-0.7), BoundVariant::PaperStated).is_err());
    }

    #[test]
    fn theorem2_both_variants() {
        let (a, _) = theorem2_bounds(&bessel(0.5), BoundVariant::PaperStated).unwrap();
        assert_eq!(a, 3.0 / 118.0);
        let (a, b) = theorem2_bounds(&bessel(0.5), BoundVariant::CorrectedRational).unwrap();
        assert_eq!(a, 3.0 / 121.0);
        assert_eq!(b, 121.0 / 239.0);
        let (a, b) = theorem2_bounds(&bessel(1.5), BoundVariant::PaperStated).unwrap();
        assert_eq!((a, b), (163.0 / 198.0, 361.0 / 198.0));
        assert!(theorem2_bounds(&bessel(0.46), BoundVariant::PaperStated).is_err());
    }

    #[test]
    fn corollaries() {
        assert_eq!(
            corollary_bounds(0.5, Corollary::C31, BoundVariant::PaperStated).unwrap(),
            (4.5, 5.5)
        );
        assert_eq!(
            corollary_bounds(1.5, Corollary::C32, BoundVariant::PaperStated).unwrap(),
            (163.0 / 198.0, 361.0 / 198.0)
        );
        let (a, b) = corollary_bounds(0.5, Corollary::C31, BoundVariant::CorrectedRational).unwrap();
        assert_relative_eq!(a, 9.0 / 11.0, max_relative = 1e-15);
        assert_relative_eq!(b, 11.0 / 13.0, max_relative = 1e-15);
        assert!(corollary_bounds(-0.7, Corollary::C31, BoundVariant::PaperStated).is_err());
        assert!(corollary_bounds(0.4, Corollary::C32, BoundVariant::PaperStated).is_err());
    }

    #[test]
    fn critical_order() {
        let ns = nu_star();
        assert!((ns - 0.46807).abs() < 1e-5);
        let (num, _) = formulas::theorem2_gate_parts(&4.0, &(ns + 1.0));
        assert!(num.abs() < 1e-9);
        assert_relative_eq!(critical_mu(1) - 1.0, ns, max_relative = 1e-14);
        let (num, _) = formulas::theorem2_gate_parts(&4.0, &1.5);
        assert_eq!(num, 3.0);
    }

    #[test]
    fn gate_report_cases() {
        let g = gates(&bessel(0.5));
        assert!(g.lemma.satisfied && g.theorem1.satisfied && g.theorem2.satisfied);
        assert_eq!((g.lemma.gate_value, g.theorem1.gate_value, g.theorem2_numerator), (12.0, 6.0, 3.0));
        let g = gates(&bessel(0.46));
        assert!(g.lemma.satisfied && g.theorem1.satisfied && !g.theorem2.satisfied);
        let g = gates(&bessel(-0.9999));
        assert!(!g.lemma.satisfied && !g.theorem1.satisfied && !g.theorem2.satisfied);
    }

    #[test]
    fn printed_fraction_alone_is_not_enough() {
        // μ just above the denominator root: fraction > 0 but 2λμ < 1.
        let p = bessel(-0.97);
        let g = gates(&p);
        assert!(g.theorem2.gate_value > 0.0);
        assert!(!g.theorem2.satisfied);
    }

    #[test]
    fn exact_rationals() {
        let half = parse_decimal("0.5").unwrap();
        let e = exact_bounds(1, std::slice::from_ref(&half), BoundVariant::PaperStated).unwrap();
        assert_eq!(format_rational(&e.theorem1.0), "9/2");
        assert_eq!(format_rational(&e.theorem1.1), "11/2");
        assert_eq!(format_rational(&e.theorem2.0), "3/118");
        assert_eq!(format_rational(&e.theorem2_numerator), "3");
        let e = exact_bounds(1, &[half], BoundVariant::CorrectedRational).unwrap();
        assert_eq!(format_rational(&e.theorem2.0), "3/121");
        assert_eq!(format_rational(&e.theorem2.1), "121/239");
        assert_eq!(format_rational(&e.lemma.1), "239/121");
        assert_eq!(parse_decimal("-0.25").map(|r| format_rational(&r)), Some("-1/4".into()));
        assert!(parse_decimal("1e-3").is_none());
    }
}
