//! Spinorial connection coefficients on the example metrics.

mod common;

use common::*;
use plebanski_geometry::{connection, div_del_q};
use symkernel::Expr;

#[test]
fn undotted_connection_of_the_constant_curvature_metric() {
    // For Q^ȦḂ = (Λ/3)p^Ȧp^Ḃ the divergence ∂^Ȧ Q_ȦḊ is (Λy, −Λx), so
    // Γ_122Ḋ = Γ_212Ḋ = −(1/√2)(Λy, −Λx) and Γ_222Ḋ = 0.
    let (ctx, m, lambda) = constant_curvature_metric();
    let chart = ctx.chart();
    let (x, y) = (Expr::var(&chart[2]), Expr::var(&chart[3]));
    let div = div_del_q(&m);
    assert!(div[0].equivalent(&(&lambda * &y)), "∂^Ȧ Q_Ȧ1̇ must be Λy");
    assert!(div[1].equivalent(&(-(&lambda * &x))), "∂^Ȧ Q_Ȧ2̇ must be −Λx");

    let conn = connection(&m);
    let sqrt2 = Expr::sqrt2();
    let minus_half_sqrt2 = Expr::ratio(-1, 2) * &sqrt2;
    let want1 = &minus_half_sqrt2 * &(&lambda * &y);
    let want2 = &minus_half_sqrt2 * &(-(&lambda * &x));
    for (a, b, mm) in [(1u8, 2u8, 2u8), (2, 1, 2)] {
        assert!(
            conn.gamma(a, b, mm, 1).equivalent(&want1),
            "Γ_{a}{b}{mm}1̇ must be −(1/√2)Λy"
        );
        assert!(
            conn.gamma(a, b, mm, 2).equivalent(&want2),
            "Γ_{a}{b}{mm}2̇ must be (1/√2)Λx"
        );
    }
    for d in 1..=2u8 {
        assert!(
            conn.gamma(2, 2, 2, d).is_zero(),
            "Γ_222Ḋ must vanish when ð^Ȧ Q_ȦḂ = 0"
        );
    }
}

#[test]
fn fully_null_connection_component_vanishes_for_all_example_families() {
    let (_, dks) = dks_metric();
    let (_, two) = two_parameter_metric();
    let (_, einstein, _) = einstein_metric();
    for (name, m) in [("dKS", &dks), ("two-parameter", &two), ("Einstein", &einstein)] {
        let conn = connection(m);
        for d in 1..=2u8 {
            assert!(
                conn.gamma(2, 2, 2, d).is_zero(),
                "{name}: Γ_222Ḋ = −√2 ð^Ȧ Q_ȦḊ must vanish"
            );
        }
    }
}

#[test]
fn dotted_connection_of_the_constant_curvature_metric_by_hand() {
    // Γ_ȦḂ2Ḋ = √2 ∂_(Ȧ Q_Ḃ)Ḋ with Q_1̇1̇ = (Λ/3)y², Q_1̇2̇ = −(Λ/3)xy,
    // Q_2̇2̇ = (Λ/3)x², and ∂_1̇ = ∂_x, ∂_2̇ = ∂_y.
    let (ctx, m, lambda) = constant_curvature_metric();
    let chart = ctx.chart();
    let (x, y) = (Expr::var(&chart[2]), Expr::var(&chart[3]));
    let conn = connection(&m);
    let sqrt2 = Expr::sqrt2();
    let third = Expr::ratio(1, 3) * &lambda;

    // Γ_1̇1̇2Ḋ = √2 ∂_x Q_1̇Ḋ: (0, −(Λ/3)y).
    assert!(conn.gamma_dotted(1, 1, 2, 1).is_zero());
    assert!(conn
        .gamma_dotted(1, 1, 2, 2)
        .equivalent(&(-(&sqrt2 * &(&third * &y)))));

    // Γ_2̇2̇2Ḋ = √2 ∂_y Q_2̇Ḋ: (−(Λ/3)x, 0).
    assert!(conn
        .gamma_dotted(2, 2, 2, 1)
        .equivalent(&(-(&sqrt2 * &(&third * &x)))));
    assert!(conn.gamma_dotted(2, 2, 2, 2).is_zero());

    // Γ_1̇2̇2Ḋ = √2 ½(∂_x Q_2̇Ḋ + ∂_y Q_1̇Ḋ): Ḋ=1̇ gives ½√2(−(Λ/3)y + 2(Λ/3)y).
    let half_sqrt2 = Expr::ratio(1, 2) * &sqrt2;
    let want_d1 = &half_sqrt2 * &(&third * &y);
    let want_d2 = &half_sqrt2 * &(&third * &x);
    assert!(conn.gamma_dotted(1, 2, 2, 1).equivalent(&want_d1));
    assert!(conn.gamma_dotted(1, 2, 2, 2).equivalent(&want_d2));

    assert!(
        conn.undotted().verify_declared_symmetries().unwrap(),
        "undotted connection must be symmetric in its first index pair"
    );
    assert!(
        conn.dotted().verify_declared_symmetries().unwrap(),
        "dotted connection must be symmetric in its first index pair"
    );
}
