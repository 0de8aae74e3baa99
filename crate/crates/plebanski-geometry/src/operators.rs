//! First-order differential operators adapted to the double-null form.
//!
//! With chart (q, p, x, y) := (q¹̇, q²̇, p¹̇, p²̇) and metric components
//! Q^{ȦḂ}, the four operator families are
//!
//! ```text
//! ∂_Ȧ := ∂/∂p^Ȧ                 ∂_1̇ = ∂_x,   ∂_2̇ = ∂_y
//! ∂^Ȧ := ∂/∂p_Ȧ                 ∂^1̇ = ∂_y,   ∂^2̇ = −∂_x
//! ð_Ȧ := ∂/∂q^Ȧ − Q_Ȧ^Ḃ ∂_Ḃ     ð_1̇ = ∂_q − Q^{1̇2̇}∂_x − Q^{2̇2̇}∂_y
//!                               ð_2̇ = ∂_p + Q^{1̇1̇}∂_x + Q^{1̇2̇}∂_y
//! ð^Ȧ := ∂/∂q_Ȧ + Q^{ȦḂ} ∂_Ḃ    ð^1̇ = ð_2̇,   ð^2̇ = −ð_1̇
//! ```
//!
//! Each family is implemented directly from its defining formula. The upper
//! and lower families are deliberately *not* related through the generic
//! spinor index-raising rule: differentiating with respect to a lowered
//! coordinate introduces the opposite sign (∂^1̇ = +∂_2̇, whereas a raised
//! spinor component obeys v^1̇ = −v_2̇), so deriving one family from another
//! mechanically would silently flip signs.
//!
//! The spinorial derivative combines the families with a √2 weight:
//! ∂_{1Ȧ} = √2 ∂_Ȧ and ∂_{2Ȧ} = √2 ð_Ȧ (likewise with a raised dotted
//! index). √2 is the formal quadratic unit of the coefficient field, never a
//! float.

use spinor_core::Variance;
use symkernel::{Expr, Symbol};

use crate::metric::PlebanskiMetric;

fn d(e: &Expr, v: &Symbol) -> Expr {
    e.differentiate(v)
        .expect("differentiation with respect to a chart coordinate cannot fail")
}

/// ∂-family: derivative along the p-coordinates. `idx` is the dotted index
/// value (1 or 2); `variance` selects ∂_Ȧ or ∂^Ȧ.
pub fn del(e: &Expr, m: &PlebanskiMetric, idx: u8, variance: Variance) -> Expr {
    let [_, _, x, y] = m.chart();
    match (variance, idx) {
        (Variance::Lower, 1) => d(e, x),
        (Variance::Lower, 2) => d(e, y),
        (Variance::Upper, 1) => d(e, y),
        (Variance::Upper, 2) => -d(e, x),
        _ => panic!("dotted index out of range: {idx}"),
    }
}

/// ð-family: derivative along the q-coordinates corrected by Q^{ȦḂ} so that
/// it differentiates along the null-string distribution. `idx` is the dotted
/// index value (1 or 2); `variance` selects ð_Ȧ or ð^Ȧ.
pub fn eth(e: &Expr, m: &PlebanskiMetric, idx: u8, variance: Variance) -> Expr {
    let [q, p, x, y] = m.chart();
    match (variance, idx) {
        (Variance::Lower, 1) => {
            d(e, q) - m.q_upper(1, 2) * &d(e, x) - m.q_upper(2, 2) * &d(e, y)
        }
        (Variance::Lower, 2) => {
            d(e, p) + m.q_upper(1, 1) * &d(e, x) + m.q_upper(1, 2) * &d(e, y)
        }
        (Variance::Upper, 1) => eth(e, m, 2, Variance::Lower),
        (Variance::Upper, 2) => -eth(e, m, 1, Variance::Lower),
        _ => panic!("dotted index out of range: {idx}"),
    }
}

/// Spinorial derivative ∂_{AȦ} (undotted index lowered): √2 ∂_Ȧ for A = 1,
/// √2 ð_Ȧ for A = 2. The dotted index may take either variance.
pub fn spinor_derivative(
    e: &Expr,
    m: &PlebanskiMetric,
    a: u8,
    adot: u8,
    dotted_variance: Variance,
) -> Expr {
    let inner = match a {
        1 => del(e, m, adot, dotted_variance),
        2 => eth(e, m, adot, dotted_variance),
        _ => panic!("undotted index out of range: {a}"),
    };
    Expr::sqrt2() * inner
}

/// The covector ∂^Ȧ Q_{ȦḂ} (free index Ḃ lowered, component values for
/// Ḃ = 1̇, 2̇).
pub fn div_del_q(m: &PlebanskiMetric) -> [Expr; 2] {
    std::array::from_fn(|b| {
        let b = (b + 1) as u8;
        (1..=2u8)
            .map(|a| del(&m.q_lower(a, b), m, a, Variance::Upper))
            .sum()
    })
}

/// The covector ð^Ȧ Q_{ȦḂ} (free index Ḃ lowered). Its identical vanishing
/// characterises metrics whose second family of null strings is
/// nonexpanding.
pub fn div_eth_q(m: &PlebanskiMetric) -> [Expr; 2] {
    std::array::from_fn(|b| {
        let b = (b + 1) as u8;
        (1..=2u8)
            .map(|a| eth(&m.q_lower(a, b), m, a, Variance::Upper))
            .sum()
    })
}
