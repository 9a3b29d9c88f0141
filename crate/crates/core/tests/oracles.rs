//! Per-operation examples checked against independent oracles.

use hybess::closed_form::{closed_form_phi, closed_form_phi_prime};
use hybess::series::{eval_f, eval_f_prime, eval_partial, eval_partial_prime};
use hybess::{coefficient_direct, coefficient_table, make_params, quotient, EvalConfig, QuotientKind};
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Central difference of an analytic function along the real direction.
fn central_difference(f: impl Fn(Complex64) -> Complex64, z: Complex64, h: f64) -> Complex64 {
    (f(z + h) - f(z - h)) / (2.0 * h)
}

#[test]
fn series_matches_three_halves_closed_form() {
    let cfg = EvalConfig::default();
    let p = make_params(1, &[1.5]).unwrap();
    let z = c(0.7, 0.2);
    let series = eval_f(&p, z, &cfg).unwrap();
    let closed = closed_form_phi(1.5, z, &cfg).unwrap();
    assert!((series - closed).norm() < 1e-12);
}

#[test]
fn derivative_matches_finite_difference() {
    let cfg = EvalConfig::default();
    let p = make_params(2, &[0.1, 0.2]).unwrap();
    let z = c(0.5, 0.0);
    let fd = central_difference(|w| eval_f(&p, w, &cfg).unwrap(), z, 1e-5);
    let exact = eval_f_prime(&p, z, &cfg).unwrap();
    assert!((fd - exact).norm() < 1e-8, "{fd} vs {exact}");
}

#[test]
fn partial_derivative_matches_finite_difference() {
    let p = make_params(1, &[1.5]).unwrap();
    let z = c(0.0, 0.5);
    let fd = central_difference(|w| eval_partial(&p, 2, w), z, 1e-5);
    let exact = eval_partial_prime(&p, 2, z);
    assert!((fd - exact).norm() < 1e-8);
}

#[test]
fn reciprocal_sine_on_imaginary_axis() {
    let cfg = EvalConfig::default();
    let p = make_params(1, &[0.5]).unwrap();
    let y = 0.999f64;
    let q = quotient(&p, QuotientKind::FmOverF, 0, c(0.0, y), &cfg).unwrap();
    assert!((q.re - y / y.sinh()).abs() < 1e-13);
    assert!((q.re - 0.85118).abs() < 1e-5);
}

#[test]
fn closed_form_derivative_matches_series() {
    let cfg = EvalConfig::default();
    for nu in [0.5, 1.5] {
        let p = make_params(1, &[nu]).unwrap();
        for z in [c(0.05, 0.01), c(-0.3, 0.8), c(0.0, -0.999)] {
            let a = eval_f_prime(&p, z, &cfg).unwrap();
            let b = closed_form_phi_prime(nu, z, &cfg).unwrap();
            assert!((a - b).norm() < 1e-12, "nu={nu} z={z}");
        }
    }
}

#[test]
fn recurrence_against_log_space_formula() {
    let p = make_params(3, &[0.2, 0.3, 0.4]).unwrap();
    let t = coefficient_table(&p, 30).unwrap();
    for n in 0..=30 {
        let direct = coefficient_direct(&p, n);
        assert!(((t.values()[n] - direct) / direct).abs() < 1e-12, "n={n}");
    }
}
