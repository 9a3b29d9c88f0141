use hybess::bounds::{
    corollary_bounds, formulas, gates, theorem1_bounds, theorem1_claims, theorem2_bounds,
    BoundVariant, Corollary, Functional,
};
use hybess::closed_form::closed_form_phi;
use hybess::series::{eval_f, eval_f_prime, eval_partial, eval_partial_prime, Evaluator, Shape};
use hybess::verify::{
    check_claim, estimate_extremum, ring_point, FunctionalEvaluator, SamplingConfig, Status,
};
use hybess::{
    coefficient_direct, coefficient_table, make_params, quotient, tail_bound, EvalConfig,
    QuotientKind,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn alpha_vec() -> impl Strategy<Value = Vec<f64>> {
    (1usize..=3).prop_flat_map(|d| prop::collection::vec(-0.9f64..5.0, d))
}

fn disk_point() -> impl Strategy<Value = Complex64> {
    (0.0f64..1.0, 0.0f64..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recurrence_matches_direct(alpha in alpha_vec()) {
        let p = make_params(alpha.len(), &alpha).unwrap();
        let t = coefficient_table(&p, 30).unwrap();
        for n in 0..=30 {
            let direct = coefficient_direct(&p, n);
            prop_assert!(((t.values()[n] - direct) / direct).abs() <= 1e-12);
        }
    }

    #[test]
    fn decay_certificate(alpha in alpha_vec()) {
        let p = make_params(alpha.len(), &alpha).unwrap();
        prop_assume!(2.0 * p.lambda_mu() > 1.0);
        let t = coefficient_table(&p, 30).unwrap();
        prop_assert!(t.decay_violations().is_empty());
    }

    #[test]
    fn derivative_consistency(alpha in alpha_vec(), z in disk_point()) {
        let p = make_params(alpha.len(), &alpha).unwrap();
        let cfg = EvalConfig::default();
        let h = 1e-5;
        let fd = (eval_f(&p, z + h, &cfg).unwrap() - eval_f(&p, z - h, &cfg).unwrap()) / (2.0 * h);
        let exact = eval_f_prime(&p, z, &cfg).unwrap();
        prop_assert!((fd - exact).norm() <= 1e-8);
    }

    #[test]
    fn partial_sums_approach_limit(alpha in alpha_vec(), z in disk_point()) {
        let p = make_params(alpha.len(), &alpha).unwrap();
        prop_assume!(2.0 * p.lambda_mu() > 1.0);
        let f = eval_f(&p, z, &EvalConfig::default()).unwrap();
        for m in 0..12 {
            let gap = (eval_partial(&p, m, z) - f).norm();
            prop_assert!(gap <= tail_bound(&p, m, z.norm()).unwrap() + 1e-13);
        }
    }

    #[test]
    fn conjugate_symmetry(alpha in alpha_vec(), z in disk_point(), m in 0usize..6) {
        let p = make_params(alpha.len(), &alpha).unwrap();
        let ev = Evaluator::new(&p, &EvalConfig::default()).unwrap();
        for shape in [Shape::Value, Shape::Derivative, Shape::Reduced] {
            let a = ev.eval(shape, z).unwrap().value;
            let b = ev.eval(shape, z.conj()).unwrap().value;
            prop_assert_eq!(a, b.conj());
            prop_assert_eq!(ev.partial(shape, m, z), ev.partial(shape, m, z.conj()).conj());
        }
        prop_assert_eq!(eval_partial_prime(&p, m, z), eval_partial_prime(&p, m, z.conj()).conj());
    }

    #[test]
    fn quotient_is_one_at_origin(alpha in alpha_vec(), m in 0usize..20) {
        let p = make_params(alpha.len(), &alpha).unwrap();
        for kind in QuotientKind::ALL {
            let q = quotient(&p, kind, m, Complex64::new(0.0, 0.0), &EvalConfig::default()).unwrap();
            prop_assert_eq!(q, Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn corollary_reduction_identity(nu in 0.46808f64..20.0) {
        let p = make_params(1, &[nu]).unwrap();
        let (a, b) = corollary_bounds(nu, Corollary::C31, BoundVariant::PaperStated).unwrap();
        let (x, y) = theorem1_bounds(&p, BoundVariant::PaperStated).unwrap();
        prop_assert!(((a - x) / x).abs() <= 1e-14 && ((b - y) / y).abs() <= 1e-14);
        let (a, b) = corollary_bounds(nu, Corollary::C32, BoundVariant::PaperStated).unwrap();
        let (x, y) = theorem2_bounds(&p, BoundVariant::PaperStated).unwrap();
        prop_assert!(((a - x) / x).abs() <= 1e-14 && ((b - y) / y).abs() <= 1e-14);
    }

    #[test]
    fn corrected_bounds_in_unit_interval(alpha in alpha_vec()) {
        let p = make_params(alpha.len(), &alpha).unwrap();
        if let Ok((a, b)) = theorem1_bounds(&p, BoundVariant::CorrectedRational) {
            prop_assert!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0);
        }
        if let Ok((a, b)) = theorem2_bounds(&p, BoundVariant::CorrectedRational) {
            prop_assert!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0);
        }
    }

    #[test]
    fn theorem2_numerators_agree(alpha in alpha_vec()) {
        let p = make_params(alpha.len(), &alpha).unwrap();
        let (num, den) = formulas::theorem2_gate_parts(&p.lambda(), &p.mu());
        let gap = 2.0 * p.lambda_mu() - 1.0;
        let (paper, _) = formulas::theorem2_paper(&p.lambda(), &p.mu());
        let (corrected, _) = formulas::theorem2_corrected(&p.lambda(), &p.mu());
        prop_assert!((paper * den - num).abs() <= 1e-9 * num.abs().max(1.0));
        prop_assert!((corrected * gap * gap - num).abs() <= 1e-9 * num.abs().max(1.0));
    }
}

#[test]
fn reduction_on_polar_grid() {
    let cfg = EvalConfig::default();
    for nu in [0.5, 1.5] {
        let p = make_params(1, &[nu]).unwrap();
        let mut worst = 0.0f64;
        for i in 0..32 {
            let r = i as f64 / 31.0;
            for j in 0..32 {
                let z = ring_point(r, j, 32);
                let a = eval_f(&p, z, &cfg).unwrap();
                let b = closed_form_phi(nu, z, &cfg).unwrap();
                worst = worst.max((a - b).norm());
            }
        }
        assert!(worst <= 1e-12, "nu={nu}: {worst:e}");
    }
}

#[test]
fn critical_surface_root() {
    for d in 1..=4 {
        let p = make_params(d, &vec![0.0; d]).unwrap();
        let mu_star = gates(&p).critical_mu;
        let lam = p.lambda();
        let (num, _) = formulas::theorem2_gate_parts(&lam, &mu_star);
        assert!(num.abs() < 1e-9 * lam * lam, "d={d}");
    }
}

#[test]
fn corrected_theorem1_tends_to_one() {
    let mut prev = (0.0, 0.0);
    for k in 1..40 {
        let nu = 2f64.powi(k) - 1.0;
        let (a, b) = theorem1_bounds(&make_params(1, &[nu]).unwrap(), BoundVariant::CorrectedRational).unwrap();
        assert!(a > prev.0 && b > prev.1);
        prev = (a, b);
    }
    assert!(1.0 - prev.0 < 1e-10 && 1.0 - prev.1 < 1e-10);
}

#[test]
fn falsified_reports_are_sound() {
    let cfg = SamplingConfig {
        radii: 24,
        angles: 96,
        ..SamplingConfig::default()
    };
    let eval = EvalConfig::default();
    let tight = EvalConfig::with_tol(eval.target_tol / 10.0);
    let mut seen = 0;
    for nu in [0.5, 1.5] {
        let p = make_params(1, &[nu]).unwrap();
        for m in [0, 1] {
            let mut claims: Vec<_> = theorem1_claims(&p, BoundVariant::PaperStated, m).into();
            claims.extend(hybess::bounds::theorem2_claims(&p, BoundVariant::PaperStated, m));
            for claim in claims {
                let r = check_claim(&claim, &cfg, &eval);
                if r.status != Status::Falsified {
                    continue;
                }
                seen += 1;
                let fe = FunctionalEvaluator::new(claim.functional, &claim.params, &tight).unwrap();
                let pv = fe.at(r.witness.into()).unwrap();
                assert!(pv.value + pv.error_bound < claim.bound - tight.target_tol);
            }
        }
    }
    assert!(seen >= 6);
}

#[test]
fn extrema_come_in_conjugate_pairs() {
    let cfg = SamplingConfig {
        radii: 12,
        angles: 48,
        refine_levels: 0,
        ..SamplingConfig::default()
    };
    let p = make_params(1, &[0.8]).unwrap();
    for kind in QuotientKind::ALL {
        let f = Functional::Ratio { kind, m: 1 };
        let ext = estimate_extremum(f, &p, &cfg, &EvalConfig::default()).unwrap();
        let fe = FunctionalEvaluator::new(f, &p, &EvalConfig::default()).unwrap();
        assert_eq!(fe.at(ext.witness.conj()).unwrap().value, ext.value, "{kind}");
    }
}

#[test]
fn thread_count_does_not_change_extremum() {
    let cfg = SamplingConfig {
        radii: 20,
        angles: 80,
        seed: 7,
        ..SamplingConfig::default()
    };
    let p = make_params(2, &[0.4, 0.1]).unwrap();
    let f = Functional::Ratio { kind: QuotientKind::FmOverF, m: 2 };
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| estimate_extremum(f, &p, &cfg, &EvalConfig::default()).unwrap())
    };
    let a = run(1);
    let b = run(4);
    assert_eq!(a.value.to_bits(), b.value.to_bits());
    assert_eq!(a.witness, b.witness);
}
