//! Coordinate freedom: metric transport under the chart maps that preserve
//! the quadratic-form shape, and the induced action on coefficient lists.

mod common;

use common::*;
use plebanski_geometry::{
    ansatz_to_Q, gauge_transform, pullback_matches, read_coefficients, transform_coefficients,
    GaugeTransform,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use symkernel::Expr;

#[test]
fn identity_transform_leaves_metrics_alone() {
    let (ctx, dks) = dks_metric();
    let id = GaugeTransform::identity(&ctx).unwrap();
    let moved = gauge_transform(&dks, &id).unwrap();
    for (a, b) in [(1u8, 1u8), (1, 2), (2, 2)] {
        assert!(
            moved.q_upper(a, b).equivalent(dks.q_upper(a, b)),
            "identity transport must fix Q^{a}{b}"
        );
    }
}

#[test]
fn pure_fibre_shift_translates_and_corrects_q() {
    // With q′^Ȧ = q^Ȧ and p′^Ȧ = p^Ȧ + σ^Ȧ(q^Ḃ), the transported
    // components are Q^{ȦḂ}(x → x − σ¹, y → y − σ²) plus the symmetrized
    // base-derivative of the shift:
    //   S^1̇1̇ = ∂σ¹/∂p, S^1̇2̇ = ½(∂σ²/∂p − ∂σ¹/∂q), S^2̇2̇ = −∂σ²/∂q.
    let (ctx, m) = dks_metric();
    let chart = ctx.chart().to_vec();
    let (q, p, x, y) = (&chart[0], &chart[1], &chart[2], &chart[3]);
    let sigma = [ctx.parse("q^2 - p").unwrap(), ctx.parse("3*q*p").unwrap()];
    let id_q = [Expr::var(q), Expr::var(p)];
    let t = GaugeTransform::new(&ctx, id_q.clone(), sigma.clone(), id_q).unwrap();
    let moved = gauge_transform(&m, &t).unwrap();

    let mut shift = BTreeMap::new();
    shift.insert(x.clone(), Expr::var(x) - &sigma[0]);
    shift.insert(y.clone(), Expr::var(y) - &sigma[1]);
    let s11 = sigma[0].differentiate(p).unwrap();
    let s12 = Expr::ratio(1, 2)
        * &(sigma[1].differentiate(p).unwrap() - sigma[0].differentiate(q).unwrap());
    let s22 = -sigma[1].differentiate(q).unwrap();
    for ((a, b), corr) in [(1u8, 1u8), (1, 2), (2, 2)].into_iter().zip([s11, s12, s22]) {
        let want = m.q_upper(a, b).substitute(&shift).unwrap() + corr;
        assert!(
            moved.q_upper(a, b).equivalent(&want),
            "fibre shift must act on Q^{a}{b} by translation plus the shift derivative"
        );
    }
}

#[test]
fn transported_metrics_pull_back_to_the_original() {
    let ctx = ctx4();
    let mut rng = ChaCha8Rng::seed_from_u64(31415);
    let m = random_ansatz_metric(&ctx, &mut rng);
    for round in 0..3 {
        let t = random_transform(&ctx, &mut rng);
        assert!(
            pullback_matches(&m, &t).unwrap(),
            "round {round}: Jᵀ G′(φ(x)) J must equal G(x) entrywise"
        );
    }
}

#[test]
fn coefficient_law_agrees_with_transport_plus_extraction() {
    // Two routes from a coefficient list to the transformed list must agree:
    // (expand → transport the metric → extract) versus the direct
    // coefficient transformation law.
    let ctx = ctx4();
    let mut rng = ChaCha8Rng::seed_from_u64(99991);
    for round in 0..3 {
        let c = random_ansatz(&ctx, &mut rng);
        let t = random_transform(&ctx, &mut rng);
        let via_metric = read_coefficients(&gauge_transform(&ansatz_to_Q(&c).unwrap(), &t).unwrap())
            .expect("transported ansatz metrics stay in the ansatz family");
        let direct = transform_coefficients(&c, &t).unwrap();
        assert!(
            via_metric.a_spinor().equivalent(&direct.a_spinor()).unwrap(),
            "round {round}: cubic-slope vector law"
        );
        assert!(
            via_metric.b2_spinor().equivalent(&direct.b2_spinor()).unwrap(),
            "round {round}: quadratic tensor law"
        );
        assert!(
            via_metric.b_scalar().equivalent(direct.b_scalar()),
            "round {round}: quadratic scalar law"
        );
        assert!(
            via_metric.c3_spinor().equivalent(&direct.c3_spinor()).unwrap(),
            "round {round}: cubic coefficient law"
        );
        assert!(
            via_metric.c1_spinor().equivalent(&direct.c1_spinor()).unwrap(),
            "round {round}: linear vector law"
        );
        assert!(
            via_metric.e2_spinor().equivalent(&direct.e2_spinor()).unwrap(),
            "round {round}: constant slice law"
        );
    }
}
