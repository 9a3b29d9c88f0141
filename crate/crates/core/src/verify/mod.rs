//! Numerical adjudication of bound claims over a sampled sub-disk.

mod audit;
mod cross;
mod examples;
mod extremum;
mod report;
mod sampling;

pub use audit::{coefficient_inequality_audit, AuditReport, PochhammerCheck};
pub use cross::{cross_validate, CrossValidation};
pub use examples::{check_printed_examples, ExampleReport, PrintedExample, PRINTED_EXAMPLES};
pub use extremum::{estimate_extremum, Extremum, FunctionalEvaluator, PointValue};
pub use report::{
    check_claim, check_lemma_bounds, check_univalence, classify, univalence_claim, Point, Status,
    VerificationReport, MAX_EXCLUDED_FRACTION,
};
pub use sampling::{refine_points, ring_point, sample_disk, SamplingConfig};

use crate::bounds::{lemma_claims, theorem1_claims, theorem2_claims, BoundClaim, BoundVariant};
use crate::params::HyperBesselParams;

/// Partial-sum orders exercised by default.
pub const DEFAULT_ORDERS: [usize; 4] = [0, 1, 2, 5];

/// Lemma claims followed by both theorems' claims for each order in `orders`.
pub fn claim_battery(params: &HyperBesselParams, variant: BoundVariant, orders: &[usize]) -> Vec<BoundClaim> {
    let mut claims: Vec<BoundClaim> = lemma_claims(params).into();
    for &m in orders {
        claims.extend(theorem1_claims(params, variant, m));
        claims.extend(theorem2_claims(params, variant, m));
    }
    claims
}
