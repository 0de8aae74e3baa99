//! The cubic coefficient ansatz: expansion into Q^{ȦḂ}, extraction back
//! out of a metric, and rejection of metrics not of that shape.

mod common;

use common::*;
use plebanski_geometry::{
    ansatz_to_Q, read_coefficients, AnsatzCoefficients, GeometryError, PlebanskiMetric,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symkernel::Expr;

#[test]
fn dks_coefficient_list_expands_to_the_dks_metric() {
    let (ctx, want) = dks_metric();
    let zero = Expr::zero;
    let m0 = ctx.parse("M0").unwrap();
    let n0 = ctx.parse("N0").unwrap();
    let p0 = ctx.parse("P0").unwrap();
    let c = AnsatzCoefficients::new(
        &ctx,
        [zero(), Expr::one()],
        [Expr::one(), zero(), zero()],
        zero(),
        AnsatzCoefficients::c3_from_mnps(m0.clone(), n0.clone(), p0.clone(), zero()),
        [Expr::from_int(4) * &p0, Expr::from_int(-2) * &n0],
        [Expr::ratio(3, 2) * &n0, Expr::ratio(-1, 2) * &m0, zero()],
    )
    .unwrap();

    let mnps = c.mnps();
    assert!(mnps[0].equivalent(&m0), "M slot must read back as M0");
    assert!(mnps[1].equivalent(&n0), "N slot must read back as N0");
    assert!(mnps[2].equivalent(&p0), "P slot must read back as P0");
    assert!(mnps[3].is_zero(), "S slot must read back as zero");

    let built = ansatz_to_Q(&c).unwrap();
    for (a, b) in [(1u8, 1u8), (1, 2), (2, 2)] {
        assert!(
            built.q_upper(a, b).equivalent(want.q_upper(a, b)),
            "expanded Q^{a}{b} must match the inline metric"
        );
    }
}

#[test]
fn einstein_coefficient_list_expands_to_the_einstein_metric() {
    let (ctx, want, [f, fp, b0]) = einstein_metric();
    let zero = Expr::zero;
    let q = ctx.parse("q").unwrap();
    // Lowered cubic components: only C_1̇2̇2̇ = f·q and
    // C_2̇2̇2̇ = f²q³ + f′q² are present.
    let c_122 = &f * &q;
    let c_222 = &(&f * &f) * &q.powi(3).unwrap() + &fp * &q.powi(2).unwrap();
    let e11 = (&(&f * &f) * &q.powi(2).unwrap() + &fp * &q)
        .try_div(&b0)
        .unwrap();
    let e12 = -f.try_div(&b0).unwrap();
    let c = AnsatzCoefficients::new(
        &ctx,
        [zero(), zero()],
        [zero(), zero(), zero()],
        b0.clone(),
        AnsatzCoefficients::c3_from_mnps(zero(), zero(), c_122, c_222),
        [zero(), zero()],
        [e11, e12, zero()],
    )
    .unwrap();
    let built = ansatz_to_Q(&c).unwrap();
    for (a, b) in [(1u8, 1u8), (1, 2), (2, 2)] {
        assert!(
            built.q_upper(a, b).equivalent(want.q_upper(a, b)),
            "expanded Q^{a}{b} must match the one-function family"
        );
    }
}

#[test]
fn coefficient_extraction_round_trips_random_lists() {
    let ctx = ctx4();
    let mut rng = ChaCha8Rng::seed_from_u64(2718);
    for round in 0..5 {
        let c = random_ansatz(&ctx, &mut rng);
        let m = ansatz_to_Q(&c).unwrap();
        let back = read_coefficients(&m).unwrap();
        assert!(
            back.a_spinor().equivalent(&c.a_spinor()).unwrap(),
            "round {round}: cubic-slope vector must round trip"
        );
        assert!(
            back.b2_spinor().equivalent(&c.b2_spinor()).unwrap(),
            "round {round}: quadratic tensor must round trip"
        );
        assert!(
            back.b_scalar().equivalent(c.b_scalar()),
            "round {round}: quadratic scalar must round trip"
        );
        assert!(
            back.c3_spinor().equivalent(&c.c3_spinor()).unwrap(),
            "round {round}: cubic coefficient must round trip"
        );
        assert!(
            back.c1_spinor().equivalent(&c.c1_spinor()).unwrap(),
            "round {round}: linear vector must round trip"
        );
        assert!(
            back.e2_spinor().equivalent(&c.e2_spinor()).unwrap(),
            "round {round}: constant slice must round trip"
        );
    }
}

#[test]
fn extraction_rejects_metrics_outside_the_ansatz_family() {
    let ctx = ctx4();
    // Quartic fibre dependence: no cubic ansatz reproduces x⁴.
    let quartic = PlebanskiMetric::new(
        &ctx,
        ctx.parse("x^4").unwrap(),
        Expr::zero(),
        Expr::zero(),
    )
    .unwrap();
    assert!(matches!(
        read_coefficients(&quartic).unwrap_err(),
        GeometryError::NotAnsatzForm { .. }
    ));

    // Cubic but with a monomial slot the ansatz never populates:
    // Q^{1̇1̇} cubic terms are spanned by x³ and x²y only.
    let wrong_cubic = PlebanskiMetric::new(
        &ctx,
        ctx.parse("y^3").unwrap(),
        Expr::zero(),
        Expr::zero(),
    )
    .unwrap();
    assert!(matches!(
        read_coefficients(&wrong_cubic).unwrap_err(),
        GeometryError::NotAnsatzForm { .. }
    ));
}
