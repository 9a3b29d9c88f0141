use hybess_wasm::{bounds_curve_impl, check_claims_impl, quotient_heatmap_impl};
use hybess::verify::Status;

#[test]
fn heatmap_is_one_at_origin_and_masked_outside_disk() {
    let size = 41;
    let h = quotient_heatmap_impl(1, "0.5", "F_over_Fm", 0, size, 0.999).unwrap();
    assert_eq!(h.len(), size * size);
    assert_eq!(h[20 * size + 20], 1.0);
    assert!(h[0].is_nan());
    let min = h.iter().copied().filter(|v| v.is_finite()).fold(f64::INFINITY, f64::min);
    assert!(min > 9.0 / 11.0 && min < 1.0);
}

#[test]
fn heatmap_rejects_bad_input() {
    assert!(quotient_heatmap_impl(1, "0.5", "nope", 0, 8, 0.999).is_err());
    assert!(quotient_heatmap_impl(1, "-2", "F_over_Fm", 0, 8, 0.999).is_err());
    assert!(quotient_heatmap_impl(1, "0.5", "F_over_Fm", 0, 1, 0.999).is_err());
}

#[test]
fn curve_reports_gates_and_bounds() {
    let pts = bounds_curve_impl(1, 0.0, 1.0, 3, "corrected").unwrap();
    assert_eq!(pts.len(), 3);
    let mid = &pts[1];
    assert_eq!(mid.alpha, 0.5);
    let [a, b] = mid.theorem1.unwrap();
    assert!((a - 9.0 / 11.0).abs() < 1e-15 && (b - 11.0 / 13.0).abs() < 1e-15);
    assert!(!pts[0].theorem2_gate && pts[2].theorem2_gate);
    assert!(bounds_curve_impl(1, 1.0, 0.0, 3, "corrected").is_err());
    assert!(bounds_curve_impl(1, 0.0, 1.0, 3, "other").is_err());
}

#[test]
fn claims_match_expected_verdicts() {
    let corrected = check_claims_impl(1, "0.5", "corrected", 0, 16, 64).unwrap();
    assert_eq!(corrected.len(), 7);
    assert!(corrected.iter().all(|c| c.status == Status::Holds));
    let paper = check_claims_impl(1, "0.5", "paper", 0, 16, 64).unwrap();
    assert!(paper.iter().any(|c| c.status == Status::Falsified && c.witness == [0.0, 0.0]));
}

#[test]
fn json_shape() {
    let pts = bounds_curve_impl(2, 0.0, 1.0, 2, "paper").unwrap();
    let v = serde_json::to_value(&pts).unwrap();
    for key in ["alpha", "lambdaMu", "lemmaGate", "theorem1Gate", "theorem2Gate", "lemma", "theorem1", "theorem2"] {
        assert!(v[0].get(key).is_some(), "{key}");
    }
}
